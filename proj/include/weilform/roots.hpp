#ifndef WEILFORM_ROOTS_HPP
#define WEILFORM_ROOTS_HPP

#include <optional>
#include <vector>

#include "weilform/interval.hpp"
#include "weilform/poly.hpp"

namespace weilform {

// Certified isolating disk: the closed disk |z - center| <= radius contains
// exactly `multiplicity` roots of the isolated polynomial (counted with
// multiplicity), and disks of distinct boxes are disjoint.
struct RootBox {
    GaussRat center;
    Rat radius;
    int multiplicity = 1;
    BoxC rect;          // isolating rectangle within the squarefree layer
    bool exact = false; // center is exactly the root
    int layer = 1;      // squarefree-layer index e the root came from

    QIv abs2() const { return exact ? QIv::point(center.re * center.re + center.im * center.im) : rect.abs2(); }
    std::string describe() const;
};

// Number of roots of squarefree s strictly inside rect, by the argument
// principle evaluated exactly along the boundary (quadrant crossing walk).
// Returns nullopt when a root lies on the boundary (caller perturbs).
std::optional<int> count_roots_in_rect(const Poly& s, const BoxC& rect);

// Box system for one squarefree polynomial: isolating rectangles, one root
// each, refinable.
class SquarefreeBoxes {
  public:
    explicit SquarefreeBoxes(Poly s);

    const Poly& poly() const { return s_; }
    size_t size() const { return rects_.size(); }
    const BoxC& rect(size_t i) const { return rects_[i]; }
    bool is_exact(size_t i) const { return exact_[i]; }
    const GaussRat& exact_point(size_t i) const { return points_[i]; }

    // halve the rectangle around root i (exact points just shrink)
    void refine(size_t i);
    // refine until 0 is strictly outside every rectangle
    void exclude_zero();

  private:
    Poly s_;
    std::vector<BoxC> rects_;
    std::vector<bool> exact_;
    std::vector<GaussRat> points_;
};

// Full isolation of a rational polynomial, multiplicity layers included.
class RootIsolator {
  public:
    explicit RootIsolator(const Poly& p);

    const std::vector<RootBox>& boxes() const { return boxes_; }
    const Poly& layer_poly(int e) const;

    // shrink every radius strictly below eps, keeping disks disjoint
    void refine_below(const Rat& eps);

  private:
    void rebuild(size_t i);
    void separate();
    std::map<int, SquarefreeBoxes> layers_;
    std::vector<std::pair<int, size_t>> origin_;  // (layer e, index in layer)
    std::vector<RootBox> boxes_;
};

std::vector<RootBox> isolate_roots(const Poly& p);

// Real-root machinery (used by the boundary walk and exposed for tests).
// Chain is a signed-remainder Sturm chain of squarefree u.
std::vector<Poly> sturm_chain(const Poly& u);
int sturm_count_open(const std::vector<Poly>& chain, const Rat& a, const Rat& b);

struct RealRootSite {
    Rat lo, hi;   // open interval, or lo == hi for an exact root
    bool exact() const { return lo == hi; }
};
// isolating sites for the real roots of squarefree u in the open interval
// (a, b); endpoints must not be roots
std::vector<RealRootSite> isolate_real_roots(const Poly& u, const Rat& a, const Rat& b);

}  // namespace weilform

#endif
