#ifndef WEILFORM_CHECKS_HPP
#define WEILFORM_CHECKS_HPP

#include "weilform/kring.hpp"

namespace weilform {

struct CheckRecord {
    std::string name;
    bool pass = false;
    std::string details;
};

struct Report {
    std::vector<CheckRecord> records;
    bool pass() const {
        for (const auto& r : records)
            if (!r.pass) return false;
        return true;
    }
    void add(std::string name, bool ok, std::string details = "") {
        records.push_back({std::move(name), ok, std::move(details)});
    }
};

// Cohomology data: per-degree det(1 - T Fr | H^n) factors, optionally with
// the full Frobenius matrix when Jordan-level checks are wanted.
struct IhEntry {
    int n = 0;
    Poly poly;
    std::optional<Mat> matrix;
};

struct IhInput {
    Int q{2};
    std::string kind;  // "intersection" or "ordinary"
    std::vector<IhEntry> entries;
};

// Parity and functional-equation checks for intersection cohomology data:
// purity per degree, P_n = P_n^dagger, evenness of special multiplicities
// (Jordan level when a matrix is given, semisimple level otherwise), and
// the displayed functional equation for odd degrees.
Report ih_check(const IhInput& input);

// Virtual (ordinary cohomology) checks: weight split of the alternating
// class, multiplicity symmetry per weight, evenness at +-q^{w/2} for odd
// weights, and the dimension parity of odd-weight parts.
Report mixed_check(const IhInput& input);

}  // namespace weilform

#endif
