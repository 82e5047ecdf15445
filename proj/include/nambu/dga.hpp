#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nambu/rational.hpp"
#include "nambu/report.hpp"

namespace nambu {

// Koszul sign convention for swapping two homogeneous factors of bidegrees
// (p,q) and (p',q'):
//   TotalParity:  (-1)^{(p+q)(p'+q')}
//   Bigraded:     (-1)^{pp' + qq'}
enum class SignRule { TotalParity, Bigraded };

struct Bidegree {
    int p = 0;  // form degree
    int q = 0;  // ghost degree
    int total() const { return p + q; }
    Bidegree operator+(const Bidegree& o) const { return {p + o.p, q + o.q}; }
    bool operator==(const Bidegree&) const = default;
};

std::string bidegree_str(const Bidegree& d);

struct GeneratorInfo {
    std::string name;
    Bidegree degree;
};

// Ordered alphabet of free graded-commutative generators. The id order fixes
// the canonical monomial order, so generators must be added family by family.
class GeneratorSet {
   public:
    explicit GeneratorSet(SignRule rule) : rule_(rule) {}

    std::size_t add(std::string name, Bidegree degree);
    std::size_t size() const { return gens_.size(); }
    const GeneratorInfo& info(std::size_t id) const;
    SignRule rule() const { return rule_; }

    // +1 or -1 for swapping adjacent homogeneous factors.
    int koszul(const Bidegree& x, const Bidegree& y) const;
    // g*g = 0 exactly when g anticommutes with itself under the rule.
    bool squares_to_zero(std::size_t id) const;
    Bidegree monomial_degree(const std::vector<std::size_t>& mono) const;

   private:
    SignRule rule_;
    std::vector<GeneratorInfo> gens_;
};

// Element of the free graded-commutative algebra over the generator set.
// Canonical form: monomials are non-decreasing id sequences with no repeated
// self-anticommuting generator; the empty monomial is the unit.
class GradedElement {
   public:
    explicit GradedElement(std::shared_ptr<const GeneratorSet> gens);

    static GradedElement unit(std::shared_ptr<const GeneratorSet> gens);
    static GradedElement generator(std::shared_ptr<const GeneratorSet> gens,
                                   std::size_t id);

    const std::shared_ptr<const GeneratorSet>& gens() const { return gens_; }
    const std::map<std::vector<std::size_t>, Rational>& terms() const {
        return terms_;
    }
    bool is_zero() const { return terms_.empty(); }

    // Adds coeff * the product of the listed generators in the given order,
    // canonicalizing with Koszul signs.
    void add_word(const std::vector<std::size_t>& word, const Rational& coeff);

    // Common bidegree of all monomials; nullopt when zero or inhomogeneous.
    std::optional<Bidegree> degree() const;

    GradedElement operator+(const GradedElement& o) const;
    GradedElement operator-(const GradedElement& o) const;
    GradedElement operator*(const GradedElement& o) const;
    GradedElement operator*(const Rational& scalar) const;
    GradedElement operator-() const;
    bool operator==(const GradedElement& o) const;

    // Deterministic rendering, e.g. "-1/2 A1*A2 + F3".
    std::string str() const;

   private:
    std::shared_ptr<const GeneratorSet> gens_;
    std::map<std::vector<std::size_t>, Rational> terms_;
};

// Degree-one derivation, stored by its images on generators and extended by
// the graded Leibniz rule with the set's sign convention.
class Differential {
   public:
    Differential(std::shared_ptr<const GeneratorSet> gens, Bidegree shift);

    const std::shared_ptr<const GeneratorSet>& gens() const { return gens_; }
    void set_image(std::size_t id, GradedElement image);
    const GradedElement& image(std::size_t id) const;
    const Bidegree& shift() const { return shift_; }

    // D(g_1..g_k) = sum_i (prefix sign) g_1..g_{i-1} D(g_i) g_{i+1}..g_k,
    // where the prefix sign moves D (of degree shift) past g_1..g_{i-1}.
    GradedElement apply(const GradedElement& x) const;

    // D(D(g)) = 0 on every generator; residuals reported per generator id.
    CheckReport check_nilpotent() const;
    // Every image is homogeneous of the generator's degree plus the shift.
    CheckReport check_degree_consistency() const;
    // D(xy) = D(x)y + (-1)^{<D,x>} x D(y) on seeded random element pairs.
    CheckReport check_leibniz(std::uint64_t seed, std::size_t trials) const;

   private:
    std::shared_ptr<const GeneratorSet> gens_;
    Bidegree shift_;
    std::vector<GradedElement> images_;
};

// (D1 + D2)^2 = 0 on every generator (e.g. total differential d + delta).
CheckReport check_sum_nilpotent(const Differential& d1, const Differential& d2,
                                const std::string& check_name);
// D1 D2 + D2 D1 = 0 on every generator.
CheckReport check_anticommute(const Differential& d1, const Differential& d2,
                              const std::string& check_name);

}  // namespace nambu
