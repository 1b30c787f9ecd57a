#ifndef WEILFORM_GROUPS_HPP
#define WEILFORM_GROUPS_HPP

#include <string>
#include <vector>

#include "weilform/cyclotomic.hpp"
#include "weilform/linalg.hpp"

namespace weilform {

// images of 0..degree-1
using Perm = std::vector<int>;

Perm perm_identity(int degree);
Perm perm_mul(const Perm& a, const Perm& b);  // (a*b)(x) = a(b(x))
Perm perm_inverse(const Perm& a);

// Permutation-presented finite group with cached element list, conjugacy
// classes and centralizer orders.
class FiniteGroup {
  public:
    FiniteGroup(int degree, std::vector<Perm> generators);

    int degree() const { return degree_; }
    long order() const { return static_cast<long>(elements_.size()); }
    const std::vector<Perm>& elements() const { return elements_; }
    const std::vector<Perm>& generators() const { return generators_; }
    int element_index(const Perm& p) const;

    int mul(int a, int b) const;
    int inv(int a) const;
    int identity() const { return id_; }
    // generator word (indices into generators()) whose product is element e
    const std::vector<int>& word(int e) const { return words_[static_cast<size_t>(e)]; }

    int class_count() const { return static_cast<int>(classes_.size()); }
    const std::vector<int>& conjugacy_class(int c) const { return classes_[static_cast<size_t>(c)]; }
    int class_of(int e) const { return class_of_[static_cast<size_t>(e)]; }
    // computed by direct commuting count and checked against |G|/|class|
    long centralizer_order(int e) const;

    static long order_cap;  // default 5000

  private:
    int degree_;
    std::vector<Perm> generators_;
    std::vector<Perm> elements_;
    std::vector<std::vector<int>> words_;
    std::vector<std::vector<int>> classes_;
    std::vector<int> class_of_;
    int id_ = 0;
};

// Representation over a cyclotomic field, input as generator matrices.
class GroupRep {
  public:
    GroupRep(const FiniteGroup& group, int conductor, std::vector<Matrix<Cyc>> generator_matrices);

    const FiniteGroup& group() const { return group_; }
    int dimension() const { return dim_; }
    int conductor() const { return conductor_; }
    const Matrix<Cyc>& matrix(int element) const { return mats_[static_cast<size_t>(element)]; }
    const Cyc& character(int element) const { return chars_[static_cast<size_t>(element)]; }

    // exact Frobenius-Schur indicator (1/|G|) sum chi(g^2)
    Rat fs_indicator() const;
    // exact <chi, chi>
    Rat character_norm() const;
    bool is_irreducible() const { return character_norm() == 1; }

  private:
    const FiniteGroup& group_;
    int conductor_;
    int dim_;
    std::vector<Matrix<Cyc>> mats_;
    std::vector<Cyc> chars_;
};

// Basis of invariant sigma-symmetric bilinear forms: rho(g)^T B rho(g) = B
// for all generators, B^T = sigma B.
std::vector<Matrix<Cyc>> invariant_bilinear_space(const GroupRep& rep, int sigma);
// Deterministic grid sweep, as in the rational case.
std::optional<Matrix<Cyc>> find_nondegenerate_cyc(const std::vector<Matrix<Cyc>>& basis);

// The exact L^(2) data on BG: every coefficient equals the indicator nu and
// the closed form is (1 - T)^{-nu}.
struct BgL2Series {
    std::vector<Rat> coefficients;
    long pole_order = 0;  // nu; negative means a zero at T = 1
};
BgL2Series bg_l2_series(const GroupRep& rep, int terms);

// Both sides of sum_{[g] in R} 1/|Z(g)| = |R| / |G|, computed independently
// (centralizer enumeration vs element count).  R is a union of conjugacy
// classes given by class indices.
std::pair<Rat, Rat> chebotarev_identity(const FiniteGroup& g, const std::vector<int>& class_ids);

// Bundled groups for tests, fixtures and the CLI.
std::vector<std::string> bundled_group_names();
FiniteGroup bundled_group(const std::string& name);
// All irreducible representations of the named group (S3, D4, Q8, A4, S4,
// and cyclic groups Z/n).
std::vector<std::pair<std::string, GroupRep>> bundled_irreps(const FiniteGroup& group,
                                                             const std::string& name);

}  // namespace weilform

#endif
