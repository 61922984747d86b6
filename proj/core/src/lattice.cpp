#include "fanoslope/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "fanoslope/errors.hpp"

namespace fanoslope::nslattice {

bool DivisorClass::is_zero() const {
    return std::all_of(coords.begin(), coords.end(),
                       [](const Rational& r) { return r.is_zero(); });
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    if (rank() != o.rank()) throw DataError("divisor class rank mismatch");
    std::vector<Rational> c(coords);
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords[i];
    return DivisorClass(std::move(c));
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
    return *this + (-o);
}

DivisorClass DivisorClass::operator-() const {
    std::vector<Rational> c(coords);
    for (auto& r : c) r = -r;
    return DivisorClass(std::move(c));
}

DivisorClass DivisorClass::operator*(const Rational& s) const {
    std::vector<Rational> c(coords);
    for (auto& r : c) r *= s;
    return DivisorClass(std::move(c));
}

Rational pair(const DivisorClass& D, const CurveClass& C) {
    if (D.rank() != C.rank()) throw DataError("divisor/curve rank mismatch");
    Rational acc(0);
    for (size_t i = 0; i < D.rank(); ++i) acc += D.coords[i] * C.pairings[i];
    return acc;
}

void IntersectionTensor::set(std::vector<unsigned> indices, Rational value) {
    if (indices.size() != dim_)
        throw DataError("tensor key arity mismatch");
    for (unsigned i : indices)
        if (i >= rank_) throw DataError("tensor key index out of range");
    std::sort(indices.begin(), indices.end());
    if (value.is_zero())
        entries_.erase(indices);
    else
        entries_[std::move(indices)] = std::move(value);
}

Rational IntersectionTensor::entry(std::vector<unsigned> indices) const {
    std::sort(indices.begin(), indices.end());
    auto it = entries_.find(indices);
    if (it == entries_.end()) return Rational(0);
    return it->second;
}

std::vector<std::string> IntersectionTensor::validate() const {
    std::vector<std::string> violations;
    if (dim_ < 1) violations.push_back("tensor dim must be >= 1");
    if (rank_ < 1) violations.push_back("tensor rank must be >= 1");
    if (entries_.empty()) violations.push_back("tensor must have at least one nonzero entry");
    return violations;
}

namespace {

// Multiplies dim() linear forms in rank() formal basis variables and
// contracts the resulting degree-n monomials against the tensor. Works for
// any coefficient ring C with +, * and a zero test; instantiated with
// Rational (intersect) and UniPoly (volume_polynomial).
template <class C>
C contract_forms(const IntersectionTensor& t, const std::vector<std::vector<C>>& forms,
                 const C& zero, const C& one) {
    using Mono = std::vector<unsigned>;
    std::map<Mono, C> acc;
    acc.emplace(Mono(t.rank(), 0u), one);
    for (const auto& form : forms) {
        std::map<Mono, C> next;
        for (const auto& [mono, coeff] : acc) {
            for (unsigned i = 0; i < t.rank(); ++i) {
                const C& ci = form[i];
                if (ci == zero) continue;
                Mono m = mono;
                ++m[i];
                auto [it, inserted] = next.emplace(std::move(m), coeff * ci);
                if (!inserted) it->second = it->second + coeff * ci;
            }
        }
        acc = std::move(next);
    }
    C total = zero;
    for (const auto& [mono, coeff] : acc) {
        std::vector<unsigned> key;
        key.reserve(t.dim());
        for (unsigned i = 0; i < t.rank(); ++i)
            key.insert(key.end(), mono[i], i);
        Rational e = t.entry(std::move(key));
        if (e.is_zero()) continue;
        total = total + coeff * e;
    }
    return total;
}

void check_arity(const IntersectionTensor& t, size_t nclasses, size_t rank) {
    if (nclasses != t.dim()) {
        std::ostringstream os;
        os << "intersect arity mismatch: tensor dim " << t.dim() << ", got " << nclasses
           << " classes";
        throw DataError(os.str());
    }
    if (rank != t.rank()) {
        std::ostringstream os;
        os << "intersect rank mismatch: tensor rank " << t.rank() << ", class rank " << rank;
        throw DataError(os.str());
    }
}

} // namespace

Rational intersect(const IntersectionTensor& t, const std::vector<DivisorClass>& classes) {
    if (classes.empty()) throw DataError("intersect requires at least one class");
    for (const auto& c : classes) check_arity(t, classes.size(), c.rank());
    std::vector<std::vector<Rational>> forms;
    forms.reserve(classes.size());
    for (const auto& c : classes) forms.push_back(c.coords);
    return contract_forms<Rational>(t, forms, Rational(0), Rational(1));
}

Rational volume(const IntersectionTensor& t, const DivisorClass& D) {
    return intersect(t, std::vector<DivisorClass>(t.dim(), D));
}

UniPoly volume_polynomial(const IntersectionTensor& t, const DivisorClass& A,
                          const DivisorClass& B) {
    check_arity(t, t.dim(), A.rank());
    check_arity(t, t.dim(), B.rank());
    std::vector<UniPoly> form(t.rank());
    for (unsigned i = 0; i < t.rank(); ++i)
        form[i] = UniPoly::linear(A.coords[i], -B.coords[i]);
    std::vector<std::vector<UniPoly>> forms(t.dim(), form);
    return contract_forms<UniPoly>(t, forms, UniPoly::zero(),
                                   UniPoly::constant(Rational(1)));
}

Rational mixed_power(const IntersectionTensor& t, const DivisorClass& A, unsigned i,
                     const DivisorClass& B) {
    if (i > t.dim()) throw DataError("mixed power exponent exceeds tensor dim");
    std::vector<DivisorClass> classes;
    classes.reserve(t.dim());
    for (unsigned k = 0; k < i; ++k) classes.push_back(A);
    for (unsigned k = i; k < t.dim(); ++k) classes.push_back(B);
    return intersect(t, classes);
}

IntersectionTensor surface_tensor(const std::vector<std::vector<Rational>>& matrix) {
    const unsigned rho = static_cast<unsigned>(matrix.size());
    IntersectionTensor t(2, rho);
    for (unsigned i = 0; i < rho; ++i) {
        if (matrix[i].size() != rho) throw DataError("surface matrix must be square");
        for (unsigned j = 0; j < rho; ++j) {
            if (matrix[i][j] != matrix[j][i])
                throw DataError("surface matrix must be symmetric");
            if (i <= j) t.set({i, j}, matrix[i][j]);
        }
    }
    return t;
}

std::vector<std::vector<Rational>> surface_matrix(const IntersectionTensor& t) {
    if (t.dim() != 2) throw DataError("surface matrix requires a dim-2 tensor");
    std::vector<std::vector<Rational>> m(t.rank(), std::vector<Rational>(t.rank(), Rational(0)));
    for (const auto& [key, value] : t.entries()) {
        m[key[0]][key[1]] = value;
        m[key[1]][key[0]] = value;
    }
    return m;
}

} // namespace fanoslope::nslattice
