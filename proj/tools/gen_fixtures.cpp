// Regenerates the bundled fixture files.  The elliptic-curve trace is
// re-derived here by brute-force point enumeration so that the fixture data
// stays reproducible from first principles.

#include <fstream>
#include <iostream>

#include "weilform/json_io.hpp"

using namespace weilform;

namespace {

// #E(F_p) for y^2 = x^3 + a x + b by direct enumeration (p odd prime),
// including the point at infinity
long count_elliptic_points(long p, long a, long b) {
    long count = 1;  // infinity
    for (long x = 0; x < p; ++x)
        for (long y = 0; y < p; ++y) {
            long lhs = (y * y) % p;
            long rhs = ((x * x % p) * x + a * x + b) % p;
            if ((lhs - rhs) % p == 0) ++count;
        }
    return count;
}

json entry(int n, const Poly& p) { return json{{"n", n}, {"poly", poly_to_json(p)}}; }

void write(const std::string& dir, const std::string& name, const json& j) {
    std::ofstream out(dir + "/" + name);
    out << j.dump(2) << "\n";
    std::cout << "wrote " << dir << "/" << name << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "fixtures";

    // P^1 over F_5: H^0 = 1 - T, H^2 = 1 - 5T
    {
        json j{{"q", 5}, {"kind", "intersection"},
               {"entries", json::array({entry(0, Poly::from_longs({1, -1})),
                                        entry(2, Poly::from_longs({1, -5}))})}};
        write(dir, "p1_f5.json", j);
    }
    // P^2 over F_5
    {
        json j{{"q", 5}, {"kind", "intersection"},
               {"entries", json::array({entry(0, Poly::from_longs({1, -1})),
                                        entry(2, Poly::from_longs({1, -5})),
                                        entry(4, Poly::from_longs({1, -25}))})}};
        write(dir, "p2_f5.json", j);
    }
    // elliptic curve y^2 = x^3 + x over F_5: trace from the point count
    {
        long p = 5;
        long points = count_elliptic_points(p, 1, 0);
        long a = p + 1 - points;
        std::cout << "y^2 = x^3 + x over F_" << p << ": " << points << " points, a = " << a << "\n";
        Poly h1({std::vector<Rat>{Rat(1), Rat(-a), Rat(p)}});
        json j{{"q", 5}, {"kind", "intersection"},
               {"entries", json::array({entry(0, Poly::from_longs({1, -1})), entry(1, h1),
                                        entry(2, Poly::from_longs({1, -5}))})}};
        write(dir, "elliptic_f5.json", j);
        json jm = j;
        jm["kind"] = "ordinary";
        write(dir, "elliptic_f5_ordinary.json", jm);
    }
    // doctored: a mixed-weight factor sitting in degree 1
    {
        Poly bad = Poly::from_longs({1, -5}) * Poly::from_longs({1, -1});
        json j{{"q", 5}, {"kind", "intersection"},
               {"entries", json::array({entry(0, Poly::from_longs({1, -1})), entry(1, bad)})}};
        write(dir, "doctored_mixed.json", j);
    }
    // doctored: pure but parity-violating (1 - 3T at q = 9, weight 1)
    {
        json j{{"q", 9}, {"kind", "intersection"},
               {"entries", json::array({entry(1, Poly::from_longs({1, -3}))})}};
        write(dir, "doctored_parity.json", j);
        json jm = j;
        jm["kind"] = "ordinary";
        write(dir, "doctored_parity_ordinary.json", jm);
    }
    // unipotent 2x2 module (shadow of E_2)
    {
        Mat f(2, 2);
        f(0, 0) = 1;
        f(0, 1) = 1;
        f(1, 1) = 1;
        json j = module_to_json(FrobeniusModule(f, Int(5), 0));
        write(dir, "e2_shadow.json", j);
    }
    // S3 standard representation over Q
    {
        FiniteGroup s3 = bundled_group("S3");
        for (auto& [name, rep] : bundled_irreps(s3, "S3")) {
            if (name != "std") continue;
            json j = rep_to_json(rep);
            j["group"] = group_to_json(s3);
            write(dir, "s3_standard.json", j);
        }
    }
    // Q8 two-dimensional representation over Q(i)
    {
        FiniteGroup q8 = bundled_group("Q8");
        for (auto& [name, rep] : bundled_irreps(q8, "Q8")) {
            if (name != "spin") continue;
            json j = rep_to_json(rep);
            j["group"] = group_to_json(q8);
            write(dir, "q8_spin.json", j);
        }
    }
    return 0;
}
