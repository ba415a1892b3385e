#include "norton/finite_field.hpp"

#include <stdexcept>
#include <utility>

namespace norton {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(int p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("field order " + std::to_string(p) + " is not prime");
}

int PrimeField::inv(int a) const {
    a = reduce(a);
    if (a == 0) throw std::domain_error("inverse of zero in F_p");
    // a^(p-2)
    int result = 1, base = a, e = p_ - 2;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::string Subspace::to_string() const {
    std::string out = "<";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += "|";
        for (int x : rows[i]) out += std::to_string(x);
    }
    return out + ">";
}

namespace {

void rref_in_place(std::vector<FieldVector>& m, int cols, const PrimeField& f) {
    std::size_t r = 0;
    for (int c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        int inv = f.inv(m[r][c]);
        for (int j = 0; j < cols; ++j) m[r][j] = f.mul(m[r][j], inv);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            int factor = m[i][c];
            for (int j = 0; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
        }
        ++r;
    }
    m.resize(r);
}

} // namespace

Subspace make_subspace(int ambient, std::vector<FieldVector> generators, const PrimeField& f) {
    for (auto& g : generators) {
        if (static_cast<int>(g.size()) != ambient) throw std::invalid_argument("generator length mismatch");
        for (int& x : g) x = f.reduce(x);
    }
    rref_in_place(generators, ambient, f);
    return Subspace{ambient, std::move(generators)};
}

Subspace span(const Subspace& a, const Subspace& b, const PrimeField& f) {
    std::vector<FieldVector> gens = a.rows;
    gens.insert(gens.end(), b.rows.begin(), b.rows.end());
    return make_subspace(a.ambient, std::move(gens), f);
}

// Zassenhaus: row-reduce [[a, a], [b, 0]]; rows with zero left half carry the intersection.
Subspace intersection(const Subspace& a, const Subspace& b, const PrimeField& f) {
    const int n = a.ambient;
    std::vector<FieldVector> m;
    for (const auto& r : a.rows) {
        FieldVector row(2 * n);
        for (int j = 0; j < n; ++j) row[j] = row[n + j] = r[j];
        m.push_back(std::move(row));
    }
    for (const auto& r : b.rows) {
        FieldVector row(2 * n, 0);
        for (int j = 0; j < n; ++j) row[j] = r[j];
        m.push_back(std::move(row));
    }
    rref_in_place(m, 2 * n, f);
    std::vector<FieldVector> gens;
    for (const auto& row : m) {
        bool left_zero = true;
        for (int j = 0; j < n && left_zero; ++j) left_zero = row[j] == 0;
        if (left_zero) gens.emplace_back(row.begin() + n, row.end());
    }
    return make_subspace(n, std::move(gens), f);
}

bool contains(const Subspace& big, const Subspace& small, const PrimeField& f) {
    return span(big, small, f).dim() == big.dim();
}

bool contains_vector(const Subspace& s, const FieldVector& v, const PrimeField& f) {
    return contains(s, make_subspace(s.ambient, {v}, f), f);
}

std::vector<FieldVector> all_vectors(int n, const PrimeField& f) {
    std::vector<FieldVector> out;
    FieldVector v(n, 0);
    while (true) {
        out.push_back(v);
        int i = n - 1;
        while (i >= 0 && v[i] == f.order() - 1) v[i--] = 0;
        if (i < 0) break;
        ++v[i];
    }
    return out;
}

} // namespace norton
