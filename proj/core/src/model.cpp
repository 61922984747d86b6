#include "fanoslope/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "fanoslope/errors.hpp"

namespace fanoslope::fanomodel {

using exactmath::binomial;

unsigned VarietyModel::basis_index(const std::string& label) const {
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == label) return static_cast<unsigned>(i);
    throw DataError("unknown basis label '" + label + "' on model " + name);
}

const DivisorClass& VarietyModel::named(const std::string& divisor_name) const {
    auto it = named_divisors.find(divisor_name);
    if (it == named_divisors.end())
        throw DataError("unknown divisor '" + divisor_name + "' on model " + name);
    return it->second;
}

DivisorClass VarietyModel::make_class(const std::map<std::string, Rational>& coeffs) const {
    std::vector<Rational> coords(rank(), Rational(0));
    for (const auto& [label, value] : coeffs) coords[basis_index(label)] = value;
    return DivisorClass(std::move(coords));
}

namespace {

Rational ray_length_bound(const VarietyModel& m, const Ray& ray) {
    return pair(m.anticanonical, ray.curve);
}

void validate_restriction(const VarietyModel& m, const std::string& key,
                          const RestrictionModel& res, std::vector<std::string>& out) {
    const std::string tag = "restriction '" + key + "': ";
    if (m.named_divisors.find(key) == m.named_divisors.end()) {
        out.push_back(tag + "no named divisor with this name");
        return;
    }
    if (res.center_codim < 1) out.push_back(tag + "codim must be >= 1");
    if (res.lattice.dim() != m.dim - 1) {
        std::ostringstream os;
        os << tag << "restriction dim must be " << m.dim - 1 << ", got " << res.lattice.dim();
        out.push_back(os.str());
    }
    for (const auto& v : res.lattice.validate()) out.push_back(tag + v);
    if (res.basis.size() != res.lattice.rank())
        out.push_back(tag + "basis size disagrees with lattice rank");
    if (res.restricted_anticanonical.rank() != res.lattice.rank())
        out.push_back(tag + "restricted_anticanonical rank mismatch");
    if (res.self_class.rank() != res.lattice.rank())
        out.push_back(tag + "self_class rank mismatch");
    if (res.conormal_flags.conormal_ample.value_or(false) &&
        !res.conormal_flags.conormal_nef.value_or(true))
        out.push_back(tag + "contradictory conormal flags (ample but not nef)");
    if (res.seshadri_override) {
        if (res.seshadri_override->sign() <= 0)
            out.push_back(tag + "seshadri_override must be positive");
        // When ambient rays can also compute epsilon, both must agree.
        try {
            const DivisorClass& D = m.named_divisors.at(key);
            const DivisorClass L =
                m.anticanonical + D * Rational(static_cast<long>(res.center_codim) - 1);
            SeshadriResult s = seshadri_constant_nef(m, L, D);
            if (s.value != *res.seshadri_override)
                out.push_back(tag + "seshadri_override " + res.seshadri_override->str() +
                              " disagrees with ray value " + s.value.str());
        } catch (const DataError&) {
            // rays insufficient or inconsistent elsewhere; the override stands alone
        }
    }
}

} // namespace

std::vector<std::string> validate_model(const VarietyModel& m) {
    std::vector<std::string> out;
    if (m.dim < 1) out.push_back("dim must be >= 1");
    if (m.basis.empty()) out.push_back("basis must be nonempty");
    {
        std::set<std::string> seen;
        for (const auto& b : m.basis) {
            if (b.empty()) out.push_back("basis labels must be nonempty");
            if (!seen.insert(b).second) out.push_back("duplicate basis label '" + b + "'");
        }
    }
    for (const auto& v : m.tensor.validate()) out.push_back(v);
    if (m.tensor.dim() != m.dim) out.push_back("tensor dim disagrees with model dim");
    if (m.tensor.rank() != m.rank()) out.push_back("tensor rank disagrees with basis size");
    if (m.anticanonical.rank() != m.rank()) {
        out.push_back("anticanonical rank mismatch");
        return out; // pairings below would throw
    }
    for (const auto& ray : m.rays) {
        if (ray.curve.rank() != m.rank()) {
            out.push_back("ray '" + ray.name + "' rank mismatch");
            continue;
        }
        if (pair(m.anticanonical, ray.curve).sign() <= 0)
            out.push_back("anticanonical must pair strictly positively with ray '" + ray.name +
                          "'");
        bool meets_effective = false;
        for (const auto& g : m.effective_generators)
            if (g.rank() == m.rank() && pair(g, ray.curve).sign() > 0) meets_effective = true;
        if (!m.effective_generators.empty() && !meets_effective)
            out.push_back("ray '" + ray.name +
                          "' pairs nonpositively with every effective generator");
        if (ray.length) {
            if (*ray.length <= 0)
                out.push_back("ray '" + ray.name + "' length must be a positive integer");
            else if (Rational(*ray.length) > ray_length_bound(m, ray))
                out.push_back("ray '" + ray.name + "' length exceeds (-K . C)");
        }
    }
    for (const auto& g : m.effective_generators) {
        if (g.rank() != m.rank())
            out.push_back("effective generator rank mismatch");
        else if (g.is_zero())
            out.push_back("effective generator must be nonzero");
    }
    for (const auto& [dname, cls] : m.named_divisors)
        if (cls.rank() != m.rank())
            out.push_back("named divisor '" + dname + "' rank mismatch");
    for (const auto& [key, res] : m.restrictions) validate_restriction(m, key, res, out);
    return out;
}

void require_valid(const VarietyModel& m) {
    auto violations = validate_model(m);
    if (violations.empty()) return;
    std::ostringstream os;
    os << "invalid model '" << m.name << "':";
    for (const auto& v : violations) os << "\n  - " << v;
    throw DataError(os.str());
}

bool is_nef(const VarietyModel& m, const DivisorClass& D) {
    if (m.rays.empty()) throw DataError("nef test requires at least one ray");
    for (const auto& ray : m.rays)
        if (pair(D, ray.curve).sign() < 0) return false;
    return true;
}

namespace {

SeshadriResult seshadri_impl(const VarietyModel& m, const DivisorClass& L,
                             const DivisorClass& D) {
    if (m.rays.empty()) throw DataError("Seshadri constant requires at least one ray");
    if (D.is_zero()) throw DataError("Seshadri constant of the zero divisor");
    std::optional<Rational> best;
    std::string witness;
    for (const auto& ray : m.rays) {
        Rational dc = pair(D, ray.curve);
        if (dc.sign() <= 0) continue;
        Rational ratio = pair(L, ray.curve) / dc;
        if (!best || ratio < *best) {
            best = ratio;
            witness = ray.name;
        }
    }
    if (!best)
        throw DataError("no ray pairs positively with the divisor; Seshadri constant "
                        "unbounded in the given ray data");
    return SeshadriResult{*best, witness};
}

} // namespace

SeshadriResult seshadri_constant(const VarietyModel& m, const DivisorClass& L,
                                 const DivisorClass& D) {
    for (const auto& ray : m.rays)
        if (pair(L, ray.curve).sign() <= 0)
            throw DataError("Seshadri polarization must be strictly positive on all rays");
    return seshadri_impl(m, L, D);
}

SeshadriResult seshadri_constant_nef(const VarietyModel& m, const DivisorClass& L,
                                     const DivisorClass& D) {
    for (const auto& ray : m.rays)
        if (pair(L, ray.curve).sign() < 0)
            throw DataError("Seshadri polarization must be nef");
    return seshadri_impl(m, L, D);
}

namespace {

// Renames colliding labels with a factor suffix so the direct sum has a
// well-formed basis.
std::vector<std::string> merged_labels(const std::vector<std::string>& a,
                                       const std::vector<std::string>& b) {
    std::set<std::string> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    std::vector<std::string> out;
    for (const auto& l : a) out.push_back(sb.count(l) ? l + "1" : l);
    for (const auto& l : b) out.push_back(sa.count(l) ? l + "2" : l);
    return out;
}

DivisorClass extend_front(const DivisorClass& d, size_t total) {
    std::vector<Rational> c(d.coords);
    c.resize(total, Rational(0));
    return DivisorClass(std::move(c));
}

DivisorClass extend_back(const DivisorClass& d, size_t offset, size_t total) {
    std::vector<Rational> c(total, Rational(0));
    for (size_t i = 0; i < d.coords.size(); ++i) c[offset + i] = d.coords[i];
    return DivisorClass(std::move(c));
}

} // namespace

VarietyModel product_model(const VarietyModel& m1, const VarietyModel& m2) {
    require_valid(m1);
    require_valid(m2);
    VarietyModel p;
    p.name = m1.name + " x " + m2.name;
    p.dim = m1.dim + m2.dim;
    p.basis = merged_labels(m1.basis, m2.basis);
    const size_t rho1 = m1.rank(), rho = p.basis.size();

    p.tensor = IntersectionTensor(p.dim, static_cast<unsigned>(rho));
    for (const auto& [k1, v1] : m1.tensor.entries())
        for (const auto& [k2, v2] : m2.tensor.entries()) {
            std::vector<unsigned> key(k1);
            for (unsigned i : k2) key.push_back(static_cast<unsigned>(i + rho1));
            p.tensor.set(std::move(key), v1 * v2);
        }

    p.anticanonical = extend_front(m1.anticanonical, rho) +
                      extend_back(m2.anticanonical, rho1, rho);

    std::set<std::string> names1;
    for (const auto& r : m1.rays) names1.insert(r.name);
    for (const auto& r : m1.rays) {
        std::vector<Rational> pr(r.curve.pairings);
        pr.resize(rho, Rational(0));
        bool collides = std::any_of(m2.rays.begin(), m2.rays.end(),
                                    [&](const Ray& o) { return o.name == r.name; });
        p.rays.push_back(Ray{collides ? r.name + "1" : r.name, CurveClass(std::move(pr)),
                             r.length});
    }
    for (const auto& r : m2.rays) {
        std::vector<Rational> pr(rho, Rational(0));
        for (size_t i = 0; i < r.curve.pairings.size(); ++i) pr[rho1 + i] = r.curve.pairings[i];
        p.rays.push_back(Ray{names1.count(r.name) ? r.name + "2" : r.name,
                             CurveClass(std::move(pr)), r.length});
    }

    for (const auto& g : m1.effective_generators)
        p.effective_generators.push_back(extend_front(g, rho));
    for (const auto& g : m2.effective_generators)
        p.effective_generators.push_back(extend_back(g, rho1, rho));

    for (const auto& [dname, cls] : m1.named_divisors) {
        std::string nm = m2.named_divisors.count(dname) ? dname + "1" : dname;
        p.named_divisors[nm] = extend_front(cls, rho);
    }
    for (const auto& [dname, cls] : m2.named_divisors) {
        std::string nm = m1.named_divisors.count(dname) ? dname + "2" : dname;
        p.named_divisors[nm] = extend_back(cls, rho1, rho);
    }
    return p;
}

std::vector<DivisorClass> enumerate_effective_classes(const VarietyModel& m, unsigned bound) {
    if (m.effective_generators.empty())
        throw DataError("enumeration requires at least one effective generator");
    const size_t k = m.effective_generators.size();
    double combos = 1;
    for (size_t i = 0; i < k; ++i) combos *= static_cast<double>(bound) + 1;
    if (combos > 2e7) throw DataError("effective class enumeration too large");

    std::set<DivisorClass> seen;
    std::vector<unsigned> a(k, 0u);
    for (;;) {
        size_t i = 0;
        while (i < k) {
            if (a[i] < bound) {
                ++a[i];
                break;
            }
            a[i] = 0;
            ++i;
        }
        if (i == k) break;
        DivisorClass sum(std::vector<Rational>(m.rank(), Rational(0)));
        for (size_t j = 0; j < k; ++j)
            if (a[j] > 0)
                sum = sum + m.effective_generators[j] * Rational(static_cast<long>(a[j]));
        if (!sum.is_zero()) seen.insert(std::move(sum));
    }
    return std::vector<DivisorClass>(seen.begin(), seen.end());
}

UniPoly restriction_integrand(const RestrictionModel& E_data) {
    return nslattice::volume_polynomial(E_data.lattice, E_data.restricted_anticanonical,
                                        E_data.self_class);
}

std::string format_class(const VarietyModel& m, const DivisorClass& D) {
    if (D.rank() != m.rank()) throw DataError("format_class rank mismatch");
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < m.rank(); ++i) {
        const Rational& c = D.coords[i];
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? "-" : "+");
        }
        if (a != Rational(1)) os << a.str() << "*";
        os << m.basis[i];
    }
    if (first) return "0";
    return os.str();
}

VarietyModel build_pn(unsigned n) {
    if (n < 1) throw DataError("P^n requires n >= 1");
    VarietyModel m;
    m.name = "P^" + std::to_string(n);
    m.dim = n;
    m.basis = {"H"};
    m.tensor = IntersectionTensor(n, 1);
    m.tensor.set(std::vector<unsigned>(n, 0u), Rational(1));
    m.anticanonical = DivisorClass({Rational(static_cast<long>(n) + 1)});
    m.rays = {Ray{"line", CurveClass({Rational(1)}), static_cast<long>(n) + 1}};
    m.effective_generators = {DivisorClass({Rational(1)})};
    m.named_divisors["H"] = DivisorClass({Rational(1)});
    return m;
}

VarietyModel build_quadric3() {
    VarietyModel m;
    m.name = "Q^3";
    m.dim = 3;
    m.basis = {"H"};
    m.tensor = IntersectionTensor(3, 1);
    m.tensor.set({0, 0, 0}, Rational(2));
    m.anticanonical = DivisorClass({Rational(3)});
    m.rays = {Ray{"line", CurveClass({Rational(1)}), 3}};
    m.effective_generators = {DivisorClass({Rational(1)})};
    m.named_divisors["H"] = DivisorClass({Rational(1)});
    return m;
}

VarietyModel build_hirzebruch1() {
    VarietyModel m;
    m.name = "F_1";
    m.dim = 2;
    m.basis = {"e", "f"};
    m.tensor = IntersectionTensor(2, 2);
    m.tensor.set({0, 0}, Rational(-1));
    m.tensor.set({0, 1}, Rational(1));
    m.anticanonical = DivisorClass({Rational(2), Rational(3)});
    m.rays = {Ray{"e", CurveClass({Rational(-1), Rational(1)}), 1},
              Ray{"f", CurveClass({Rational(1), Rational(0)}), 2}};
    m.effective_generators = {DivisorClass({Rational(1), Rational(0)}),
                              DivisorClass({Rational(0), Rational(1)})};
    m.named_divisors["e"] = DivisorClass({Rational(1), Rational(0)});
    m.named_divisors["f"] = DivisorClass({Rational(0), Rational(1)});

    // e = P^1 with (-K)|_e of degree 1 and self-intersection -1.
    RestrictionModel res;
    res.center_codim = 1;
    res.basis = {"p"};
    res.lattice = IntersectionTensor(1, 1);
    res.lattice.set({0}, Rational(1));
    res.restricted_anticanonical = DivisorClass({Rational(1)});
    res.self_class = DivisorClass({Rational(-1)});
    res.conormal_flags.conormal_nef = true;
    res.conormal_flags.conormal_ample = true;
    res.conormal_flags.self_square_effective_nonzero = false;
    m.restrictions["e"] = res;
    return m;
}

VarietyModel build_p1p1() {
    VarietyModel m;
    m.name = "P^1 x P^1";
    m.dim = 2;
    m.basis = {"H1", "H2"};
    m.tensor = IntersectionTensor(2, 2);
    m.tensor.set({0, 1}, Rational(1));
    m.anticanonical = DivisorClass({Rational(2), Rational(2)});
    m.rays = {Ray{"l1", CurveClass({Rational(1), Rational(0)}), 2},
              Ray{"l2", CurveClass({Rational(0), Rational(1)}), 2}};
    m.effective_generators = {DivisorClass({Rational(1), Rational(0)}),
                              DivisorClass({Rational(0), Rational(1)})};
    m.named_divisors["H1"] = DivisorClass({Rational(1), Rational(0)});
    m.named_divisors["H2"] = DivisorClass({Rational(0), Rational(1)});
    return m;
}

VarietyModel build_pn_blowup_point(unsigned n) {
    if (n < 2) throw DataError("point blowup of P^n requires n >= 2");
    const long ln = static_cast<long>(n);
    VarietyModel m;
    m.name = "Bl_pt P^" + std::to_string(n);
    m.dim = n;
    m.basis = {"H", "E"};
    m.tensor = IntersectionTensor(n, 2);
    m.tensor.set(std::vector<unsigned>(n, 0u), Rational(1));
    m.tensor.set(std::vector<unsigned>(n, 1u), (n % 2 == 1) ? Rational(1) : Rational(-1));
    m.anticanonical = DivisorClass({Rational(ln + 1), Rational(-(ln - 1))});
    m.rays = {Ray{"e", CurveClass({Rational(0), Rational(-1)}), ln - 1},
              Ray{"l", CurveClass({Rational(1), Rational(1)}), 2}};
    m.effective_generators = {DivisorClass({Rational(0), Rational(1)}),
                              DivisorClass({Rational(1), Rational(-1)})};
    m.named_divisors["E"] = DivisorClass({Rational(0), Rational(1)});
    m.named_divisors["H"] = DivisorClass({Rational(1), Rational(0)});
    m.named_divisors["D"] = DivisorClass({Rational(1), Rational(-1)});
    return m;
}

VarietyModel build_pn_blowup_subspace(unsigned n, unsigned r) {
    if (r < 2 || r + 1 > n) throw DataError("subspace blowup requires 2 <= r <= n-1");
    const long lr = static_cast<long>(r);
    VarietyModel m;
    m.name = "Bl_P^" + std::to_string(n - r) + " P^" + std::to_string(n);
    m.dim = n;
    m.basis = {"H", "E"};
    m.tensor = IntersectionTensor(n, 2);
    m.tensor.set(std::vector<unsigned>(n, 0u), Rational(1));
    // (H^i . E^(n-i)) = (-1)^(r-1) C(n-1-i, n-r-i) for i <= n-r, from the
    // exceptional divisor P^(n-r) x P^(r-1) with E|_E = O(1,-1).
    const Rational sgn = (r % 2 == 1) ? Rational(1) : Rational(-1);
    for (unsigned i = 0; i + r <= n; ++i) {
        Rational v = sgn * binomial(n - 1 - i, static_cast<long>(n - r - i));
        std::vector<unsigned> key(i, 0u);
        key.resize(n, 1u);
        m.tensor.set(std::move(key), v);
    }
    m.anticanonical =
        DivisorClass({Rational(static_cast<long>(n) + 1), Rational(-(lr - 1))});
    m.rays = {Ray{"phi", CurveClass({Rational(0), Rational(-1)}), lr - 1},
              Ray{"l", CurveClass({Rational(1), Rational(1)}),
                  static_cast<long>(n - r) + 2}};
    m.effective_generators = {DivisorClass({Rational(0), Rational(1)}),
                              DivisorClass({Rational(1), Rational(-1)})};
    m.named_divisors["E"] = DivisorClass({Rational(0), Rational(1)});
    m.named_divisors["H"] = DivisorClass({Rational(1), Rational(0)});

    RestrictionModel res;
    res.center_codim = r;
    res.basis = {"u", "v"};
    res.lattice = IntersectionTensor(n - 1, 2);
    {
        std::vector<unsigned> key(n - r, 0u);
        key.resize(n - 1, 1u);
        res.lattice.set(std::move(key), Rational(1));
    }
    res.restricted_anticanonical =
        DivisorClass({Rational(static_cast<long>(n) + 1), Rational(0)});
    res.self_class = DivisorClass({Rational(1), Rational(-1)});
    res.conormal_flags.conormal_nef = false;
    res.conormal_flags.conormal_ample = false;
    m.restrictions["E"] = res;
    return m;
}

VarietyModel build_projbundle_family(unsigned n, long t, long s, const Rational& volZ) {
    if (n < 2) throw DataError("projective bundle family requires n >= 2");
    if (!(t > s && s > 0)) throw DataError("projective bundle family requires t > s > 0");
    if (volZ.sign() <= 0) throw DataError("projective bundle family requires volZ > 0");
    VarietyModel m;
    m.name = "P_Z(O+O(" + std::to_string(s) + ")), n=" + std::to_string(n) +
             ", t=" + std::to_string(t);
    m.dim = n;
    m.basis = {"A", "E"};
    m.tensor = IntersectionTensor(n, 2);
    // (A^i . E^(n-i)) = (-s)^(n-1-i) volZ for i <= n-1; (A^n) = 0.
    for (unsigned i = 0; i < n; ++i) {
        Rational v = Rational(-s).pow(n - 1 - i) * volZ;
        std::vector<unsigned> key(i, 0u);
        key.resize(n, 1u);
        m.tensor.set(std::move(key), v);
    }
    m.anticanonical = DivisorClass({Rational(t + s), Rational(2)});
    m.rays = {Ray{"f", CurveClass({Rational(0), Rational(1)}), 2},
              Ray{"e", CurveClass({Rational(1), Rational(-s)}), t - s}};
    m.effective_generators = {DivisorClass({Rational(1), Rational(0)}),
                              DivisorClass({Rational(0), Rational(1)})};
    m.named_divisors["A"] = DivisorClass({Rational(1), Rational(0)});
    m.named_divisors["E"] = DivisorClass({Rational(0), Rational(1)});

    RestrictionModel res;
    res.center_codim = 1;
    res.basis = {"a"};
    res.lattice = IntersectionTensor(n - 1, 1);
    res.lattice.set(std::vector<unsigned>(n - 1, 0u), volZ);
    res.restricted_anticanonical = DivisorClass({Rational(t - s)});
    res.self_class = DivisorClass({Rational(-s)});
    res.seshadri_override = Rational(2);
    res.conormal_flags.conormal_nef = true;
    res.conormal_flags.conormal_ample = true;
    res.conormal_flags.self_square_effective_nonzero = false;
    m.restrictions["E"] = res;

    // Ambient volume must match the closed form ((t+s)^n - (t-s)^n)/s volZ.
    Rational closed = (Rational(t + s).pow(n) - Rational(t - s).pow(n)) / Rational(s) * volZ;
    if (volume(m.tensor, m.anticanonical) != closed)
        throw DataError("projective bundle tensor disagrees with closed-form volume");
    return m;
}

} // namespace fanoslope::fanomodel
