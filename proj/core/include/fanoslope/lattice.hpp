#ifndef FANOSLOPE_LATTICE_HPP
#define FANOSLOPE_LATTICE_HPP

#include <map>
#include <vector>

#include "fanoslope/rational.hpp"
#include "fanoslope/unipoly.hpp"

namespace fanoslope::nslattice {

using exactmath::Rational;
using exactmath::UniPoly;

/// A divisor class as coordinates in a fixed lattice basis.
struct DivisorClass {
    std::vector<Rational> coords;

    DivisorClass() = default;
    explicit DivisorClass(std::vector<Rational> c) : coords(std::move(c)) {}

    size_t rank() const { return coords.size(); }
    bool is_zero() const;

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass operator-() const;
    DivisorClass operator*(const Rational& s) const;
    bool operator==(const DivisorClass& o) const { return coords == o.coords; }
    bool operator<(const DivisorClass& o) const { return coords < o.coords; }
};

inline DivisorClass operator*(const Rational& s, const DivisorClass& d) { return d * s; }

/// A curve class recorded by its intersection numbers against each lattice
/// basis divisor.
struct CurveClass {
    std::vector<Rational> pairings;

    CurveClass() = default;
    explicit CurveClass(std::vector<Rational> p) : pairings(std::move(p)) {}

    size_t rank() const { return pairings.size(); }
};

/// (D . C) for a divisor class and a curve class of the same rank.
Rational pair(const DivisorClass& D, const CurveClass& C);

/// The symmetric n-linear intersection form on a rank-rho lattice, stored
/// sparsely by non-decreasing basis multi-indices. Absent keys are zero.
class IntersectionTensor {
public:
    IntersectionTensor() = default;
    IntersectionTensor(unsigned dim, unsigned rank) : dim_(dim), rank_(rank) {}

    unsigned dim() const { return dim_; }
    unsigned rank() const { return rank_; }

    /// Records an entry; indices are sorted on the way in. Zero values erase.
    void set(std::vector<unsigned> indices, Rational value);
    /// Looks up a (not necessarily sorted) multi-index.
    Rational entry(std::vector<unsigned> indices) const;

    const std::map<std::vector<unsigned>, Rational>& entries() const { return entries_; }

    /// dim >= 1, rank >= 1, at least one nonzero entry, keys in range.
    std::vector<std::string> validate() const;

private:
    unsigned dim_ = 0;
    unsigned rank_ = 0;
    std::map<std::vector<unsigned>, Rational> entries_;
};

/// Fully multilinear exact evaluation of the form on exactly dim() classes.
Rational intersect(const IntersectionTensor& t, const std::vector<DivisorClass>& classes);

/// (D^n): intersect with D repeated dim() times.
Rational volume(const IntersectionTensor& t, const DivisorClass& D);

/// f(x) = ((A - x B)^n) as a polynomial of degree <= dim().
UniPoly volume_polynomial(const IntersectionTensor& t, const DivisorClass& A,
                          const DivisorClass& B);

/// Mixed powers (A^i . B^(n-i)).
Rational mixed_power(const IntersectionTensor& t, const DivisorClass& A, unsigned i,
                     const DivisorClass& B);

/// Builds a dim-2 tensor from a symmetric rho x rho matrix.
IntersectionTensor surface_tensor(const std::vector<std::vector<Rational>>& matrix);
/// Presents a dim-2 tensor as its symmetric matrix.
std::vector<std::vector<Rational>> surface_matrix(const IntersectionTensor& t);

} // namespace fanoslope::nslattice

#endif
