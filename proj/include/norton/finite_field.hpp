#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace norton {

bool is_prime(long n);

// Arithmetic in F_p for a prime p.
class PrimeField {
public:
    explicit PrimeField(int p);

    int order() const { return p_; }
    int add(int a, int b) const { return (a + b) % p_; }
    int sub(int a, int b) const { return (a - b + p_) % p_; }
    int mul(int a, int b) const { return (a * b) % p_; }
    int neg(int a) const { return (p_ - a) % p_; }
    int inv(int a) const;
    int reduce(long a) const { return static_cast<int>(((a % p_) + p_) % p_); }

private:
    int p_;
};

using FieldVector = std::vector<int>;

/*
 * Subspace of F_p^n held by its reduced row echelon basis, which is unique,
 * so two Subspace values compare equal iff they are the same subspace.
 * Ordering is lexicographic on the RREF entries.
 */
struct Subspace {
    int ambient = 0;
    std::vector<FieldVector> rows;

    int dim() const { return static_cast<int>(rows.size()); }
    std::string to_string() const; // "<1020|0112>"

    auto operator<=>(const Subspace&) const = default;
};

Subspace make_subspace(int ambient, std::vector<FieldVector> generators, const PrimeField& f);
Subspace span(const Subspace& a, const Subspace& b, const PrimeField& f);
Subspace intersection(const Subspace& a, const Subspace& b, const PrimeField& f);
bool contains(const Subspace& big, const Subspace& small, const PrimeField& f);
bool contains_vector(const Subspace& s, const FieldVector& v, const PrimeField& f);

// All vectors of F_p^n in lexicographic order.
std::vector<FieldVector> all_vectors(int n, const PrimeField& f);

} // namespace norton
