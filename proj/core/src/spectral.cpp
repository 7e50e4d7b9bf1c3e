#include "ptlattice/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ptlattice/errors.hpp"

namespace ptl {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kSafeMin = std::numeric_limits<double>::min();

double abs1(Complex z) noexcept { return std::abs(z.real()) + std::abs(z.imag()); }

/// Plane rotation G = [[c, s], [-conj(s), c]] with G [a; b] = [r; 0].
struct Givens {
    double c = 1.0;
    Complex s{};
};

Givens make_givens(Complex a, Complex b)
{
    const double abs_a = std::abs(a);
    const double abs_b = std::abs(b);
    if (abs_b == 0.0)
        return {1.0, 0.0};
    if (abs_a == 0.0)
        return {0.0, 1.0};
    const double norm = std::hypot(abs_a, abs_b);
    const Complex phase = a / abs_a;
    return {abs_a / norm, phase * std::conj(b) / norm};
}

/// Rows p, q <- G [row p; row q] over columns [begin, end).
void rotate_rows(ComplexMatrix& m, const Givens& g, std::size_t p, std::size_t q, std::size_t begin,
                 std::size_t end)
{
    for (std::size_t j = begin; j < end; ++j) {
        const Complex x = m(p, j);
        const Complex y = m(q, j);
        m(p, j) = g.c * x + g.s * y;
        m(q, j) = -std::conj(g.s) * x + g.c * y;
    }
}

/// Columns p, q <- [col p, col q] G^H over rows [begin, end).
void rotate_cols(ComplexMatrix& m, const Givens& g, std::size_t p, std::size_t q, std::size_t begin,
                 std::size_t end)
{
    for (std::size_t i = begin; i < end; ++i) {
        const Complex x = m(i, p);
        const Complex y = m(i, q);
        m(i, p) = x * g.c + y * std::conj(g.s);
        m(i, q) = -x * g.s + y * g.c;
    }
}

/// In-place Householder reduction A = Q H Q^H; Q is accumulated when given.
void reduce_to_hessenberg(ComplexMatrix& h, ComplexMatrix* q)
{
    const std::size_t n = h.dim();
    std::vector<Complex> v(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double tail = 0.0;
        for (std::size_t i = k + 2; i < n; ++i)
            tail += std::norm(h(i, k));
        if (tail == 0.0)
            continue;

        const Complex head = h(k + 1, k);
        const double alpha = std::sqrt(std::norm(head) + tail);
        const Complex phase = std::abs(head) == 0.0 ? Complex{1.0} : head / std::abs(head);
        const Complex beta = -phase * alpha;

        const std::size_t len = n - k - 1;
        for (std::size_t i = 0; i < len; ++i)
            v[i] = h(k + 1 + i, k);
        v[0] -= beta;
        double vnorm2 = 0.0;
        for (std::size_t i = 0; i < len; ++i)
            vnorm2 += std::norm(v[i]);
        const double tau = 2.0 / vnorm2;

        // Left: H <- (I - tau v v^H) H on rows k+1.., columns k+1..
        for (std::size_t j = k + 1; j < n; ++j) {
            Complex w{};
            for (std::size_t i = 0; i < len; ++i)
                w += std::conj(v[i]) * h(k + 1 + i, j);
            w *= tau;
            for (std::size_t i = 0; i < len; ++i)
                h(k + 1 + i, j) -= v[i] * w;
        }
        h(k + 1, k) = beta;
        for (std::size_t i = k + 2; i < n; ++i)
            h(i, k) = 0.0;

        // Right: H <- H (I - tau v v^H) on all rows, columns k+1..
        const auto apply_right = [&](ComplexMatrix& m) {
            for (std::size_t i = 0; i < n; ++i) {
                Complex w{};
                for (std::size_t j = 0; j < len; ++j)
                    w += m(i, k + 1 + j) * v[j];
                w *= tau;
                for (std::size_t j = 0; j < len; ++j)
                    m(i, k + 1 + j) -= w * std::conj(v[j]);
            }
        };
        apply_right(h);
        if (q != nullptr)
            apply_right(*q);
    }
}

/// Subdiagonal entry (k, k-1) is negligible (Ahues-Tisseur criterion).
bool negligible_subdiagonal(const ComplexMatrix& h, std::size_t k, std::size_t lo, std::size_t hi)
{
    const double sub = abs1(h(k, k - 1));
    if (sub <= kSafeMin)
        return true;
    double tst = abs1(h(k - 1, k - 1)) + abs1(h(k, k));
    if (tst == 0.0) {
        if (k >= lo + 2)
            tst += abs1(h(k - 1, k - 2));
        if (k + 1 <= hi)
            tst += abs1(h(k + 1, k));
    }
    if (sub > kEps * tst)
        return false;
    const double ab = std::max(sub, abs1(h(k - 1, k)));
    const double ba = std::min(sub, abs1(h(k - 1, k)));
    const double aa = std::max(abs1(h(k, k)), abs1(h(k - 1, k - 1) - h(k, k)));
    const double bb = std::min(abs1(h(k, k)), abs1(h(k - 1, k - 1) - h(k, k)));
    const double s = aa + ab;
    return ba * (ab / s) <= std::max(kSafeMin, kEps * (bb * (aa / s)));
}

/// Eigenvalue of the trailing 2x2 block closest to its (1,1) corner.
Complex wilkinson_shift(const ComplexMatrix& h, std::size_t iu)
{
    Complex t = h(iu, iu);
    const Complex u = std::sqrt(h(iu - 1, iu)) * std::sqrt(h(iu, iu - 1));
    double s = abs1(u);
    if (s == 0.0)
        return t;
    const Complex x = 0.5 * (h(iu - 1, iu - 1) - t);
    const double sx = abs1(x);
    s = std::max(s, sx);
    Complex y = s * std::sqrt((x / s) * (x / s) + (u / s) * (u / s));
    if (sx > 0.0 && (x / sx).real() * y.real() + (x / sx).imag() * y.imag() < 0.0)
        y = -y;
    const Complex denom = x + y;
    if (denom == Complex{})
        return t;
    return t - u * (u / denom);
}

/// Drives the Hessenberg matrix to upper triangular (Schur) form. With
/// full_schur the whole matrix is updated and rotations accumulate into z;
/// otherwise only the active diagonal window is touched.
void hessenberg_qr(ComplexMatrix& h, ComplexMatrix* z, bool full_schur, const EigenOptions& options)
{
    const std::size_t n = h.dim();
    if (n < 2)
        return;

    const long max_sweeps = static_cast<long>(options.iterations_per_eigenvalue) * static_cast<long>(n);
    long total = 0;
    int its = 0;
    std::size_t iu = n - 1;

    while (iu > 0) {
        std::size_t il = iu;
        for (; il > 0; --il) {
            if (negligible_subdiagonal(h, il, 0, iu)) {
                h(il, il - 1) = 0.0;
                break;
            }
        }
        if (il == iu) {
            --iu;
            its = 0;
            continue;
        }

        ++its;
        if (++total > max_sweeps) {
            throw Error(ErrorKind::NoConvergence, "QR iteration did not converge after " + std::to_string(total - 1) +
                                                      " sweeps (dimension " + std::to_string(n) + ")");
        }

        Complex shift;
        if (its % 20 == 10) {
            shift = h(il, il) + 0.75 * std::abs(h(il + 1, il).real());
        } else if (its % 20 == 0) {
            shift = h(iu, iu) + 0.75 * std::abs(h(iu, iu - 1).real());
        } else {
            shift = wilkinson_shift(h, iu);
        }

        const std::size_t col_end = full_schur ? n : iu + 1;
        const std::size_t row_begin = full_schur ? 0 : il;
        for (std::size_t k = il; k < iu; ++k) {
            Givens g;
            if (k == il) {
                g = make_givens(h(il, il) - shift, h(il + 1, il));
                rotate_rows(h, g, k, k + 1, k, col_end);
            } else {
                g = make_givens(h(k, k - 1), h(k + 1, k - 1));
                rotate_rows(h, g, k, k + 1, k - 1, col_end);
                h(k + 1, k - 1) = 0.0;
            }
            rotate_cols(h, g, k, k + 1, row_begin, std::min(k + 2, iu) + 1);
            if (z != nullptr)
                rotate_cols(*z, g, k, k + 1, 0, n);
        }
    }
}

void check_input(const ComplexMatrix& matrix, const EigenOptions& options)
{
    if (matrix.dim() > options.max_dimension) {
        throw Error(ErrorKind::InvalidArgument, "matrix dimension " + std::to_string(matrix.dim()) +
                                                    " exceeds the configured cap " +
                                                    std::to_string(options.max_dimension));
    }
    if (!matrix.is_finite())
        throw Error(ErrorKind::InvalidArgument, "matrix has non-finite entries");
}

} // namespace

std::string_view to_string(PtPhase phase) noexcept
{
    return phase == PtPhase::Unbroken ? "unbroken" : "broken";
}

std::vector<Complex> eigenvalues(const ComplexMatrix& matrix, const EigenOptions& options)
{
    check_input(matrix, options);
    ComplexMatrix h = matrix;
    reduce_to_hessenberg(h, nullptr);
    hessenberg_qr(h, nullptr, false, options);
    std::vector<Complex> values(h.dim());
    for (std::size_t i = 0; i < h.dim(); ++i)
        values[i] = h(i, i);
    return values;
}

EigenDecomposition eigen_decomposition(const ComplexMatrix& matrix, const EigenOptions& options)
{
    check_input(matrix, options);
    const std::size_t n = matrix.dim();
    ComplexMatrix t = matrix;
    ComplexMatrix q = ComplexMatrix::identity(n);
    reduce_to_hessenberg(t, &q);
    hessenberg_qr(t, &q, true, options);

    double tnorm = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            tnorm = std::max(tnorm, abs1(t(i, j)));
    const double smin_floor = std::max(kEps * tnorm, kSafeMin);

    EigenDecomposition result;
    result.values.resize(n);
    result.vectors = ComplexMatrix(n);
    std::vector<Complex> y(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Complex lambda = t(k, k);
        result.values[k] = lambda;
        std::fill(y.begin(), y.end(), Complex{});
        y[k] = 1.0;
        for (std::size_t jj = k; jj-- > 0;) {
            Complex sum{};
            for (std::size_t l = jj + 1; l <= k; ++l)
                sum += t(jj, l) * y[l];
            Complex denom = t(jj, jj) - lambda;
            if (abs1(denom) < smin_floor)
                denom = smin_floor;
            y[jj] = -sum / denom;
            const double big = abs1(y[jj]);
            if (big > 1e100) {
                for (std::size_t l = jj; l <= k; ++l)
                    y[l] /= big;
            }
        }
        double norm2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            Complex acc{};
            for (std::size_t l = 0; l <= k; ++l)
                acc += q(i, l) * y[l];
            result.vectors(i, k) = acc;
            norm2 += std::norm(acc);
        }
        const double norm = std::sqrt(norm2);
        for (std::size_t i = 0; i < n; ++i)
            result.vectors(i, k) /= norm;
    }
    return result;
}

void sort_eigenvalues(std::vector<Complex>& values)
{
    std::sort(values.begin(), values.end(), [](Complex a, Complex b) {
        if (a.real() != b.real())
            return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

Spectrum classify_spectrum(std::vector<Complex> eigenvalues, double reality_tolerance)
{
    if (!(reality_tolerance > 0.0))
        throw Error(ErrorKind::InvalidArgument, "reality tolerance must be positive");
    Spectrum spectrum;
    sort_eigenvalues(eigenvalues);
    for (const auto& e : eigenvalues)
        spectrum.max_abs_imag = std::max(spectrum.max_abs_imag, std::abs(e.imag()));
    spectrum.classification = spectrum.max_abs_imag <= reality_tolerance ? PtPhase::Unbroken : PtPhase::Broken;

    std::vector<Complex> conjugated(eigenvalues.size());
    std::transform(eigenvalues.begin(), eigenvalues.end(), conjugated.begin(), [](Complex e) { return std::conj(e); });
    spectrum.pairing_defect = multiset_distance(eigenvalues, conjugated);
    spectrum.eigenvalues = std::move(eigenvalues);
    return spectrum;
}

double residual_check(const ComplexMatrix& matrix, Complex eigenvalue, std::span<const Complex> vector)
{
    double vnorm2 = 0.0;
    for (const auto& c : vector)
        vnorm2 += std::norm(c);
    if (vnorm2 == 0.0)
        throw Error(ErrorKind::ZeroVector, "residual of the zero vector is undefined");
    const auto mv = matrix.apply(vector);
    double rnorm2 = 0.0;
    for (std::size_t i = 0; i < mv.size(); ++i)
        rnorm2 += std::norm(mv[i] - eigenvalue * vector[i]);
    const double mnorm = matrix.frobenius_norm();
    if (mnorm == 0.0)
        return std::sqrt(rnorm2) == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return std::sqrt(rnorm2) / (mnorm * std::sqrt(vnorm2));
}

double multiset_distance(std::span<const Complex> a, std::span<const Complex> b)
{
    if (a.size() != b.size()) {
        throw Error(ErrorKind::DimensionMismatch, "multisets of size " + std::to_string(a.size()) + " and " +
                                                      std::to_string(b.size()));
    }
    std::vector<Complex> sorted(a.begin(), a.end());
    sort_eigenvalues(sorted);
    std::vector<bool> used(b.size(), false);
    double worst = 0.0;
    for (const auto& value : sorted) {
        std::size_t best = b.size();
        double best_distance = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j])
                continue;
            const double d = std::abs(value - b[j]);
            if (d < best_distance) {
                best_distance = d;
                best = j;
            }
        }
        used[best] = true;
        worst = std::max(worst, best_distance);
    }
    return worst;
}

} // namespace ptl
