#include "norton/spectral.hpp"

#include "norton/errors.hpp"

#include <stdexcept>

namespace norton {

std::vector<RationalMatrix> adjacency_matrices(const GraphInstance& g) {
    const std::size_t n = g.size();
    std::vector<RationalMatrix> out(static_cast<std::size_t>(g.diameter) + 1, RationalMatrix(n, n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) out[static_cast<std::size_t>(g.distance(x, y))](x, y) = 1;
    return out;
}

Vector algebra_product(const IntersectionArray& p, const Vector& a, const Vector& b) {
    const int w = p.diameter + 1;
    Vector out(static_cast<std::size_t>(w));
    for (int i = 0; i < w; ++i) {
        if (a[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < w; ++j) {
            if (b[static_cast<std::size_t>(j)] == 0) continue;
            const Rational ab = a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
            for (int k = 0; k < w; ++k)
                if (long c = p.p(i, j, k)) out[static_cast<std::size_t>(k)] += ab * c;
        }
    }
    return out;
}

namespace {

Rational evaluate(const Vector& poly, long x) {
    Rational acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
    return acc;
}

} // namespace

SpectralData compute_spectrum(const GraphInstance& g) {
    SpectralData s;
    s.intersection = check_distance_regular(g);
    s.vertex_count = g.size();
    s.dist = g.dist;
    const int D = g.diameter;
    const std::size_t w = static_cast<std::size_t>(D) + 1;

    Vector a(w), identity(w);
    identity[0] = 1;
    if (D >= 1) a[1] = 1;

    // Minimal polynomial: first power of A that is a combination of the lower ones.
    std::vector<Vector> powers{identity};
    while (true) {
        Vector next = algebra_product(s.intersection, powers.back(), a);
        auto coeffs = solve(RationalMatrix::from_columns(powers), next);
        if (coeffs) {
            s.minimal_polynomial.clear();
            for (auto& c : *coeffs) s.minimal_polynomial.push_back(-c);
            s.minimal_polynomial.push_back(1);
            break;
        }
        powers.push_back(std::move(next));
    }
    const std::size_t degree = s.minimal_polynomial.size() - 1;
    if (degree != w)
        throw VerificationFailure("minimal polynomial of A has degree " + std::to_string(degree) + ", expected " +
                                  std::to_string(w));

    // Every eigenvalue is bounded by the valency in absolute value.
    const long valency = D >= 1 ? s.intersection.p(1, 1, 0) : 0;
    for (long x = valency; x >= -valency; --x)
        if (evaluate(s.minimal_polynomial, x) == 0) s.eigenvalues.push_back(x);
    if (s.eigenvalues.size() != w)
        throw VerificationFailure("adjacency matrix has a non-integral eigenvalue");

    // Lagrange interpolation: E_i = prod_{j != i} (A - theta_j I) / (theta_i - theta_j).
    for (std::size_t i = 0; i < w; ++i) {
        Vector e = identity;
        for (std::size_t j = 0; j < w; ++j) {
            if (j == i) continue;
            Vector factor = a;
            factor[0] -= s.eigenvalues[j];
            e = algebra_product(s.intersection, e, factor);
            const Rational denom = s.eigenvalues[i] - s.eigenvalues[j];
            for (auto& x : e) x /= denom;
        }
        // trace(E_i) = |X| times the A_0 coordinate
        Rational trace = e[0] * static_cast<long>(s.vertex_count);
        if (trace.get_den() != 1 || trace <= 0) throw VerificationFailure("non-integral idempotent trace");
        s.multiplicities.push_back(trace.get_num().get_si());
        s.idempotent_coordinates.push_back(std::move(e));
    }
    return s;
}

RationalMatrix SpectralData::idempotent(int i) const {
    const auto& coords = idempotent_coordinates.at(static_cast<std::size_t>(i));
    RationalMatrix m(vertex_count, vertex_count);
    for (std::size_t x = 0; x < vertex_count; ++x)
        for (std::size_t y = 0; y < vertex_count; ++y) m(x, y) = coords[dist[x * vertex_count + y]];
    return m;
}

Vector project(const SpectralData& s, int i, const Vector& v) {
    if (v.size() != s.vertex_count)
        throw InvalidParameters("project: vector has length " + std::to_string(v.size()) + ", expected " +
                                std::to_string(s.vertex_count));
    const auto& coords = s.idempotent_coordinates.at(static_cast<std::size_t>(i));
    const std::size_t n = s.vertex_count;
    // Group v by distance class first: (E v)[x] = sum_k coords[k] * (sum of v[y] with d(x,y) = k).
    Vector out(n), bucket(coords.size());
    for (std::size_t x = 0; x < n; ++x) {
        for (auto& b : bucket) b = 0;
        for (std::size_t y = 0; y < n; ++y)
            if (v[y] != 0) bucket[s.dist[x * n + y]] += v[y];
        for (std::size_t k = 0; k < coords.size(); ++k)
            if (bucket[k] != 0) out[x] += coords[k] * bucket[k];
    }
    return out;
}

long closed_form_eigenvalue(const FamilySpec& f, int i) {
    struct Visitor {
        int i;
        long operator()(const JohnsonParams& p) const {
            return static_cast<long>(p.k - i) * (p.n - p.k - i) - i;
        }
        long operator()(const GrassmannParams& p) const {
            return checked_pow(p.q, i + 1) * q_int(p.k - i, p.q) * q_int(p.n - p.k - i, p.q) - q_int(i, p.q);
        }
        long operator()(const HammingParams& p) const { return static_cast<long>(p.d - i) * p.e - p.d; }
        long operator()(const DualPolarParams& p) const {
            return checked_pow(p.q, p.e()) * q_int(p.d - i, p.q) - q_int(i, p.q);
        }
        long operator()(const CustomGraph&) const {
            throw InvalidParameters("no closed-form spectrum for custom graphs");
        }
    };
    if (i < 0 || i > family_diameter(f)) throw InvalidParameters("eigenvalue index out of range");
    return std::visit(Visitor{i}, f);
}

long closed_form_multiplicity(const FamilySpec& f, int i) {
    struct Visitor {
        int i;
        long operator()(const JohnsonParams& p) const { return binomial(p.n, i) - binomial(p.n, i - 1); }
        long operator()(const GrassmannParams& p) const {
            return q_binomial(p.n, i, p.q) - q_binomial(p.n, i - 1, p.q);
        }
        long operator()(const HammingParams& p) const { return binomial(p.d, i) * checked_pow(p.e - 1, i); }
        long operator()(const DualPolarParams& p) const {
            const Rational q = p.q;
            const int d = p.d, e = p.e();
            Rational m = rational_pow(q, i) * Rational(q_binomial(d, i, p.q));
            m *= (1 + rational_pow(q, d + e - 2 * i)) / (1 + rational_pow(q, d + e - i));
            for (int j = 1; j <= i; ++j) m *= (1 + rational_pow(q, d + e - j)) / (1 + rational_pow(q, j - e));
            if (m.get_den() != 1) throw VerificationFailure("non-integral dual polar multiplicity");
            return m.get_num().get_si();
        }
        long operator()(const CustomGraph&) const {
            throw InvalidParameters("no closed-form spectrum for custom graphs");
        }
    };
    if (i < 0 || i > family_diameter(f)) throw InvalidParameters("multiplicity index out of range");
    return std::visit(Visitor{i}, f);
}

} // namespace norton
