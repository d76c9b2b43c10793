#ifndef HYPERQUOT_REPN_CHARACTER_HPP
#define HYPERQUOT_REPN_CHARACTER_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hyperquot/group/group.hpp"
#include "hyperquot/repn/cyclotomic.hpp"

namespace hyperquot::repn {

using group::AutoGroup;

/// A cyclotomic-valued function on the conjugacy classes of an AutoGroup.
/// It keeps only the class map, so it does not reference the group.
class ClassFunction {
  public:
    /// Evaluates f on every element; throws std::logic_error if f is not
    /// constant on conjugacy classes.
    ClassFunction(const AutoGroup& G, const std::function<Cyclotomic(std::size_t)>& f);

    std::size_t group_order() const { return class_of_.size(); }
    std::size_t num_classes() const { return values_.size(); }
    const Cyclotomic& at(std::size_t element) const { return values_[class_of_[element]]; }
    const Cyclotomic& on_class(std::size_t c) const { return values_[c]; }
    const std::vector<Cyclotomic>& values() const { return values_; }

    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b);
    friend ClassFunction operator-(ClassFunction a, const ClassFunction& b);
    /// Pointwise product (tensor product of characters).
    friend ClassFunction operator*(ClassFunction a, const ClassFunction& b);
    friend ClassFunction operator*(std::int64_t s, ClassFunction a);
    friend bool operator==(const ClassFunction& a, const ClassFunction& b);

    ClassFunction conj() const;
    bool is_rational() const;
    bool is_integer_valued() const;

  private:
    void require_compatible(const ClassFunction& o) const;

    std::vector<std::size_t> class_of_;
    std::vector<Cyclotomic> values_;
};

ClassFunction trivial_character(const AutoGroup& G);
/// chi(g) = number of points fixed by the permutation perms[g].
ClassFunction perm_character(const AutoGroup& G, const std::vector<std::vector<std::size_t>>& perms);
/// Permutation character of G on the roots of f.
ClassFunction root_character(const AutoGroup& G);
/// Permutation character of G on the points at infinity.
ClassFunction infinity_character(const AutoGroup& G);

/// Lift of g -> gamma(g) to a one-dimensional complex character with the
/// same kernel. With omega the designated generator of the base field,
/// omega^j is sent to zeta_{q-1}^{j u}; u must be a unit mod q-1 and selects
/// the embedding.
ClassFunction gamma_tilde(const AutoGroup& G, std::int64_t u = 1);
/// The same lift applied to g -> alpha(g).
ClassFunction alpha_tilde(const AutoGroup& G, std::int64_t u = 1);

/// V = gamma~ (x) (C[R] - triv)
ClassFunction v_character(const AutoGroup& G, std::int64_t u = 1);
/// det V = gamma~^(|R|-1) * sign of g on R
ClassFunction det_v(const AutoGroup& G, std::int64_t u = 1);
/// V - epsilon with epsilon = det V for |R| even and 0 for |R| odd: the
/// character of G on H^1 of the curve.
ClassFunction h1_character(const AutoGroup& G, std::int64_t u = 1);

struct EpsilonPair {
    ClassFunction det;         // det V
    ClassFunction from_alpha;  // alpha~^(|R|/2) (x) gamma~^-1
};
/// Both constructions of epsilon for |R| even. Throws std::invalid_argument
/// for odd |R|, std::logic_error if they disagree or if triv + epsilon is not
/// the permutation character on the points at infinity.
EpsilonPair epsilon_character(const AutoGroup& G, std::int64_t u = 1);

/// (1/|G|) sum chi(g) conj(psi(g))
Cyclotomic inner_product(const ClassFunction& chi, const ClassFunction& psi);
/// dim of H-invariants, H a subgroup of G given with parent indices (or G
/// itself). Throws std::domain_error if the average is not an integer.
std::int64_t dim_invariants(const ClassFunction& chi, const AutoGroup& H);

struct LabelledCharacter {
    std::string label;
    ClassFunction chi;
};
/// The irreducible characters of an abelian group, trivial first. The
/// trivial one is "triv", a unique character of order 2 is "eta", the rest
/// are "chi1", "chi2", ... Throws std::invalid_argument for non-abelian G.
std::vector<LabelledCharacter> abelian_characters(const AutoGroup& G);

struct Component {
    std::string label;
    std::int64_t multiplicity;
};
/// Multiplicities of the irreducibles in chi (nonzero ones only).
std::vector<Component> abelian_decomposition(const ClassFunction& chi, const AutoGroup& G);
/// "triv^2 + eta^4"
std::string decomposition_string(const std::vector<Component>& parts);

struct Check {
    std::string name;
    bool ok;
    std::string detail;
};

struct H1Report {
    bool ok = true;
    std::vector<Check> checks;
    void add(std::string name, bool ok, std::string detail);
};

/// Consistency of the H^1 character: invariant dimensions against quotient
/// genera on every cyclic (or every) subgroup, integrality, Lefschetz traces
/// against fixed-point counts, and the two epsilon constructions.
H1Report verify_h1(const AutoGroup& G, bool all_subgroups = false);

}  // namespace hyperquot::repn

#endif
