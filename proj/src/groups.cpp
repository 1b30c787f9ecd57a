#include "weilform/groups.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "weilform/errors.hpp"

namespace weilform {

long FiniteGroup::order_cap = 5000;

Perm perm_identity(int degree) {
    Perm p(static_cast<size_t>(degree));
    for (int i = 0; i < degree; ++i) p[static_cast<size_t>(i)] = i;
    return p;
}

Perm perm_mul(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw InputError("permutation degree mismatch");
    Perm p(a.size());
    for (size_t i = 0; i < a.size(); ++i) p[i] = a[static_cast<size_t>(b[i])];
    return p;
}

Perm perm_inverse(const Perm& a) {
    Perm p(a.size());
    for (size_t i = 0; i < a.size(); ++i) p[static_cast<size_t>(a[i])] = static_cast<int>(i);
    return p;
}

namespace {

void check_perm(const Perm& p, int degree) {
    if (static_cast<int>(p.size()) != degree) throw InputError("permutation has wrong degree");
    std::vector<bool> seen(p.size(), false);
    for (int x : p) {
        if (x < 0 || x >= degree || seen[static_cast<size_t>(x)])
            throw InputError("not a permutation");
        seen[static_cast<size_t>(x)] = true;
    }
}

}  // namespace

FiniteGroup::FiniteGroup(int degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)) {
    if (degree_ < 1) throw InputError("FiniteGroup: degree must be >= 1");
    for (const Perm& g : generators_) check_perm(g, degree_);
    std::map<Perm, int> index;
    elements_.push_back(perm_identity(degree_));
    words_.push_back({});
    index[elements_[0]] = 0;
    for (size_t head = 0; head < elements_.size(); ++head) {
        for (size_t gi = 0; gi < generators_.size(); ++gi) {
            Perm next = perm_mul(elements_[head], generators_[gi]);
            if (index.count(next)) continue;
            if (static_cast<long>(elements_.size()) >= order_cap)
                throw InputError("FiniteGroup: order exceeds cap " + std::to_string(order_cap));
            index[next] = static_cast<int>(elements_.size());
            std::vector<int> w = words_[head];
            w.push_back(static_cast<int>(gi));
            elements_.push_back(std::move(next));
            words_.push_back(std::move(w));
        }
    }
    id_ = 0;
    // conjugacy classes by orbit enumeration
    class_of_.assign(elements_.size(), -1);
    for (size_t e = 0; e < elements_.size(); ++e) {
        if (class_of_[e] >= 0) continue;
        int cid = static_cast<int>(classes_.size());
        std::vector<int> cls;
        for (size_t g = 0; g < elements_.size(); ++g) {
            Perm conj = perm_mul(perm_mul(elements_[g], elements_[e]), perm_inverse(elements_[g]));
            int idx = index.at(conj);
            if (class_of_[static_cast<size_t>(idx)] < 0) {
                class_of_[static_cast<size_t>(idx)] = cid;
                cls.push_back(idx);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes_.push_back(std::move(cls));
    }
    // |class| * |centralizer| = |G| for every element
    for (size_t e = 0; e < elements_.size(); ++e) {
        long z = centralizer_order(static_cast<int>(e));
        long c = static_cast<long>(classes_[static_cast<size_t>(class_of_[e])].size());
        if (z * c != order()) throw InternalInvariantError("class equation violated");
    }
}

int FiniteGroup::element_index(const Perm& p) const {
    for (size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i] == p) return static_cast<int>(i);
    throw InputError("element not in group");
}

int FiniteGroup::mul(int a, int b) const {
    return element_index(perm_mul(elements_[static_cast<size_t>(a)], elements_[static_cast<size_t>(b)]));
}

int FiniteGroup::inv(int a) const { return element_index(perm_inverse(elements_[static_cast<size_t>(a)])); }

long FiniteGroup::centralizer_order(int e) const {
    const Perm& p = elements_[static_cast<size_t>(e)];
    long count = 0;
    for (const Perm& g : elements_)
        if (perm_mul(g, p) == perm_mul(p, g)) ++count;
    return count;
}

GroupRep::GroupRep(const FiniteGroup& group, int conductor, std::vector<Matrix<Cyc>> generator_matrices)
    : group_(group), conductor_(conductor) {
    if (generator_matrices.size() != group.generators().size())
        throw InputError("GroupRep: one matrix per generator required");
    dim_ = generator_matrices.empty() ? 1 : generator_matrices[0].rows();
    for (const auto& m : generator_matrices)
        if (m.rows() != dim_ || m.cols() != dim_) throw InputError("GroupRep: matrix shape mismatch");
    mats_.reserve(static_cast<size_t>(group.order()));
    for (long e = 0; e < group.order(); ++e) {
        Matrix<Cyc> m = Matrix<Cyc>::identity(dim_);
        for (int gi : group.word(static_cast<int>(e))) m = m * generator_matrices[static_cast<size_t>(gi)];
        mats_.push_back(std::move(m));
    }
    // homomorphism spot-check: all pairwise generator products
    std::vector<int> gen_idx;
    for (const Perm& g : group.generators()) gen_idx.push_back(group.element_index(g));
    for (int a : gen_idx)
        for (int b : gen_idx) {
            if (!(mats_[static_cast<size_t>(a)] * mats_[static_cast<size_t>(b)] ==
                  mats_[static_cast<size_t>(group.mul(a, b))]))
                throw InputError("GroupRep: generator matrices violate the group relations");
        }
    chars_.reserve(mats_.size());
    for (const auto& m : mats_) {
        Cyc tr(0);
        for (int i = 0; i < dim_; ++i) tr += m(i, i);
        chars_.push_back(tr);
    }
    // character must be a class function
    for (int c = 0; c < group.class_count(); ++c) {
        const auto& cls = group.conjugacy_class(c);
        for (int e : cls)
            if (chars_[static_cast<size_t>(e)] != chars_[static_cast<size_t>(cls[0])])
                throw InputError("GroupRep: character is not a class function");
    }
}

Rat GroupRep::fs_indicator() const {
    // (1/|G|) sum_g tr(rho(g)^2); the trace of the square comes straight
    // from the stored matrix
    Cyc acc(0);
    for (long e = 0; e < group_.order(); ++e) {
        const Matrix<Cyc>& m = mats_[static_cast<size_t>(e)];
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) acc += m(i, j) * m(j, i);
    }
    Cyc nu = acc / Cyc(Rat(group_.order()));
    if (!nu.is_rational())
        throw InputError("fs_indicator: character sum is not rational");
    return nu.rational_value();
}

Rat GroupRep::character_norm() const {
    Cyc acc(0);
    for (long e = 0; e < group_.order(); ++e)
        acc += chars_[static_cast<size_t>(e)] * chars_[static_cast<size_t>(group_.inv(static_cast<int>(e)))];
    Cyc v = acc / Cyc(Rat(group_.order()));
    if (!v.is_rational()) throw InputError("character_norm: inner product is not rational");
    return v.rational_value();
}

std::vector<Matrix<Cyc>> invariant_bilinear_space(const GroupRep& rep, int sigma) {
    if (sigma != 1 && sigma != -1) throw InputError("invariant_bilinear_space: sigma must be +-1");
    int d = rep.dimension();
    std::vector<std::pair<int, int>> vars;
    for (int i = 0; i < d; ++i)
        for (int j = (sigma == 1 ? i : i + 1); j < d; ++j) vars.emplace_back(i, j);
    std::vector<int> gen_idx;
    for (const Perm& g : rep.group().generators()) gen_idx.push_back(rep.group().element_index(g));
    Matrix<Cyc> sys(static_cast<int>(gen_idx.size()) * d * d, static_cast<int>(vars.size()));
    for (size_t k = 0; k < vars.size(); ++k) {
        auto [a, b] = vars[k];
        Matrix<Cyc> basis(d, d);
        basis(a, b) = Cyc(1);
        if (a != b) basis(b, a) = Cyc(sigma);
        for (size_t gi = 0; gi < gen_idx.size(); ++gi) {
            const Matrix<Cyc>& r = rep.matrix(gen_idx[gi]);
            Matrix<Cyc> lhs = r.transpose() * basis * r - basis;
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    sys(static_cast<int>(gi) * d * d + i * d + j, static_cast<int>(k)) = lhs(i, j);
        }
    }
    std::vector<Matrix<Cyc>> out;
    for (auto& x : nullspace(sys)) {
        Matrix<Cyc> bmat(d, d);
        for (size_t k = 0; k < vars.size(); ++k) {
            auto [i, j] = vars[k];
            bmat(i, j) = x[k];
            if (i != j) bmat(j, i) = Cyc(sigma) * x[k];
        }
        out.push_back(std::move(bmat));
    }
    return out;
}

std::optional<Matrix<Cyc>> find_nondegenerate_cyc(const std::vector<Matrix<Cyc>>& basis) {
    if (basis.empty()) return std::nullopt;
    int d = basis[0].rows();
    if (d == 0) return Matrix<Cyc>(0, 0);
    size_t k = basis.size();
    // principal simplex lattice sweep, as in the rational case
    double est = 1;
    for (int i = 1; i <= d; ++i) est *= static_cast<double>(k + i) / i;
    if (est > 1e6) throw InputError("find_nondegenerate_cyc: space too large for the sweep");
    std::vector<int> tuple(k, 0);
    std::optional<Matrix<Cyc>> found;
    std::function<bool(size_t, int)> rec = [&](size_t idx, int left) -> bool {
        if (idx == k) {
            if (left != 0) return false;
            Matrix<Cyc> combo(d, d);
            for (size_t t = 0; t < k; ++t)
                if (tuple[t]) combo = combo + basis[t] * Cyc(tuple[t]);
            if (!(det(combo) == Cyc(0))) {
                found = combo;
                return true;
            }
            return false;
        }
        for (int v = 0; v <= left; ++v) {
            tuple[idx] = v;
            if (rec(idx + 1, left - v)) return true;
        }
        tuple[idx] = 0;
        return false;
    };
    for (int total = 1; total <= d; ++total)
        if (rec(0, total)) return found;
    return std::nullopt;
}

BgL2Series bg_l2_series(const GroupRep& rep, int terms) {
    if (terms < 1) throw InputError("bg_l2_series: need at least one term");
    const FiniteGroup& g = rep.group();
    // stacky point count over BG: isomorphism classes are conjugacy classes,
    // automorphisms are centralizers, Frobenius acts by rho(g)
    Cyc acc(0);
    for (int c = 0; c < g.class_count(); ++c) {
        int e = g.conjugacy_class(c)[0];
        int e2 = g.mul(e, e);
        acc += rep.character(e2) / Cyc(Rat(g.centralizer_order(e)));
    }
    if (!acc.is_rational()) throw InputError("bg_l2_series: coefficient is not rational");
    Rat a = acc.rational_value();
    // the element-average route must give the same value
    if (a != rep.fs_indicator())
        throw InternalInvariantError("bg_l2_series: class sum disagrees with element sum");
    if (!rat_is_integer(a)) throw InternalInvariantError("bg_l2_series: indicator is not an integer");
    BgL2Series out;
    out.coefficients.assign(static_cast<size_t>(terms), a);
    out.pole_order = a.get_num().get_si();
    return out;
}

std::pair<Rat, Rat> chebotarev_identity(const FiniteGroup& g, const std::vector<int>& class_ids) {
    std::vector<bool> seen(static_cast<size_t>(g.class_count()), false);
    for (int c : class_ids) {
        if (c < 0 || c >= g.class_count()) throw InputError("chebotarev_identity: bad class index");
        if (seen[static_cast<size_t>(c)]) throw InputError("chebotarev_identity: repeated class");
        seen[static_cast<size_t>(c)] = true;
    }
    Rat lhs(0);
    long count = 0;
    for (int c : class_ids) {
        int e = g.conjugacy_class(c)[0];
        lhs += Rat(1) / Rat(g.centralizer_order(e));
        count += static_cast<long>(g.conjugacy_class(c).size());
    }
    Rat rhs = Rat(count) / Rat(g.order());
    return {lhs, rhs};
}

namespace {

Perm cycle(int degree, const std::vector<int>& points) {
    Perm p = perm_identity(degree);
    for (size_t i = 0; i < points.size(); ++i)
        p[static_cast<size_t>(points[i])] = points[(i + 1) % points.size()];
    return p;
}

// action of an invertible matrix [[a,b],[c,d]] over F_3 on the 8 nonzero vectors
Perm f3_matrix_perm(int a, int b, int c, int d) {
    auto idx = [](int x, int y) {
        int i = 3 * x + y;
        return i > 0 ? i - 1 : i;  // skip (0,0)
    };
    Perm p(8);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
            if (x == 0 && y == 0) continue;
            int nx = ((a * x + b * y) % 3 + 3) % 3;
            int ny = ((c * x + d * y) % 3 + 3) % 3;
            p[static_cast<size_t>(idx(x, y))] = idx(nx, ny);
        }
    return p;
}

}  // namespace

std::vector<std::string> bundled_group_names() {
    return {"Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z8", "Z12", "V4", "S3", "D4",
            "Q8", "D5", "D6", "D8", "A4", "S4", "SL23", "GL23"};
}

FiniteGroup bundled_group(const std::string& name) {
    if (name == "Z1") return FiniteGroup(1, {});
    if (name.size() >= 2 && name[0] == 'Z') {
        int n = std::stoi(name.substr(1));
        std::vector<int> pts;
        for (int i = 0; i < n; ++i) pts.push_back(i);
        return FiniteGroup(n, {cycle(n, pts)});
    }
    if (name == "V4") return FiniteGroup(4, {cycle(4, {0, 1}), cycle(4, {2, 3})});
    if (name == "S3") return FiniteGroup(3, {cycle(3, {0, 1}), cycle(3, {0, 1, 2})});
    if (name == "A4") return FiniteGroup(4, {cycle(4, {0, 1, 2}), perm_mul(cycle(4, {0, 1}), cycle(4, {2, 3}))});
    if (name == "S4") return FiniteGroup(4, {cycle(4, {0, 1}), cycle(4, {0, 1, 2, 3})});
    if (name == "D4" || name == "D5" || name == "D6" || name == "D8") {
        int n = name == "D4" ? 4 : (name == "D5" ? 5 : (name == "D6" ? 6 : 8));
        std::vector<int> pts;
        for (int i = 0; i < n; ++i) pts.push_back(i);
        Perm refl(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) refl[static_cast<size_t>(i)] = (n - i) % n;
        return FiniteGroup(n, {cycle(n, pts), refl});
    }
    if (name == "Q8") {
        Perm qi = {2, 3, 1, 0, 6, 7, 5, 4};
        Perm qj = {4, 5, 7, 6, 1, 0, 2, 3};
        return FiniteGroup(8, {qi, qj});
    }
    if (name == "SL23") return FiniteGroup(8, {f3_matrix_perm(1, 1, 0, 1), f3_matrix_perm(0, -1, 1, 0)});
    if (name == "GL23")
        return FiniteGroup(8, {f3_matrix_perm(1, 1, 0, 1), f3_matrix_perm(0, -1, 1, 0),
                               f3_matrix_perm(1, 0, 0, 2)});
    throw InputError("unknown bundled group: " + name);
}

namespace {

Matrix<Cyc> cyc_matrix(int dim, const std::vector<std::vector<Cyc>>& rows) {
    Matrix<Cyc> m(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return m;
}

Matrix<Cyc> rat_matrix(const std::vector<std::vector<long>>& rows) {
    int d = static_cast<int>(rows.size());
    Matrix<Cyc> m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = Cyc(Rat(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]));
    return m;
}

// standard 2-dimensional representation matrix of a permutation of 3 points
// (basis e0 - e2, e1 - e2)
Matrix<Cyc> std2_of_perm3(const Perm& t) {
    auto col = [&](int j) {
        // image of e_j - e_2 expressed in the basis
        std::vector<long> coords(2, 0);
        int a = t[static_cast<size_t>(j)], b = t[2];
        if (a != 2) coords[static_cast<size_t>(a)] += 1;
        if (b != 2) coords[static_cast<size_t>(b)] -= 1;
        return coords;
    };
    auto c0 = col(0), c1 = col(1);
    return rat_matrix({{c0[0], c1[0]}, {c0[1], c1[1]}});
}

// standard (n-1)-dimensional representation of a permutation of n points
Matrix<Cyc> stdrep_of_perm(const Perm& t) {
    int n = static_cast<int>(t.size());
    int d = n - 1;
    Matrix<Cyc> m(d, d);
    for (int j = 0; j < d; ++j) {
        int a = t[static_cast<size_t>(j)], b = t[static_cast<size_t>(n - 1)];
        if (a != n - 1) m(a, j) += Cyc(1);
        if (b != n - 1) m(b, j) -= Cyc(1);
    }
    return m;
}

int perm_sign(const Perm& p) {
    int sign = 1;
    std::vector<bool> seen(p.size(), false);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<size_t>(p[j]);
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

}  // namespace

std::vector<std::pair<std::string, GroupRep>> bundled_irreps(const FiniteGroup& group,
                                                             const std::string& name) {
    std::vector<std::pair<std::string, GroupRep>> out;
    auto one_dim = [&](const std::string& label, const std::vector<Cyc>& values, int conductor) {
        std::vector<Matrix<Cyc>> mats;
        for (const Cyc& v : values) mats.push_back(cyc_matrix(1, {{v}}));
        out.emplace_back(label, GroupRep(group, conductor, mats));
    };
    if (name.size() >= 2 && name[0] == 'Z' && name != "Z1") {
        int n = std::stoi(name.substr(1));
        for (int k = 0; k < n; ++k)
            one_dim("chi" + std::to_string(k), {Cyc::zeta(n, k)}, n);
        return out;
    }
    if (name == "Z1") {
        out.emplace_back("triv", GroupRep(group, 1, {}));
        return out;
    }
    if (name == "S3") {
        one_dim("triv", {Cyc(1), Cyc(1)}, 1);
        one_dim("sign", {Cyc(-1), Cyc(1)}, 1);
        out.emplace_back("std", GroupRep(group, 1, {std2_of_perm3(group.generators()[0]),
                                                    std2_of_perm3(group.generators()[1])}));
        return out;
    }
    if (name == "D4") {
        one_dim("triv", {Cyc(1), Cyc(1)}, 1);
        one_dim("chi_r", {Cyc(1), Cyc(-1)}, 1);
        one_dim("chi_s", {Cyc(-1), Cyc(1)}, 1);
        one_dim("chi_rs", {Cyc(-1), Cyc(-1)}, 1);
        out.emplace_back("rot2", GroupRep(group, 1, {rat_matrix({{0, -1}, {1, 0}}),
                                                     rat_matrix({{1, 0}, {0, -1}})}));
        return out;
    }
    if (name == "Q8") {
        one_dim("triv", {Cyc(1), Cyc(1)}, 1);
        one_dim("chi_i", {Cyc(1), Cyc(-1)}, 1);
        one_dim("chi_j", {Cyc(-1), Cyc(1)}, 1);
        one_dim("chi_k", {Cyc(-1), Cyc(-1)}, 1);
        Cyc im = Cyc::zeta(4, 1);
        out.emplace_back("spin", GroupRep(group, 4,
                                          {cyc_matrix(2, {{im, Cyc(0)}, {Cyc(0), -im}}),
                                           rat_matrix({{0, -1}, {1, 0}})}));
        return out;
    }
    if (name == "A4") {
        Cyc w3 = Cyc::zeta(3, 1), w32 = Cyc::zeta(3, 2);
        one_dim("triv", {Cyc(1), Cyc(1)}, 1);
        one_dim("omega", {w3, Cyc(1)}, 3);
        one_dim("omega2", {w32, Cyc(1)}, 3);
        out.emplace_back("std", GroupRep(group, 1, {stdrep_of_perm(group.generators()[0]),
                                                    stdrep_of_perm(group.generators()[1])}));
        return out;
    }
    if (name == "S4") {
        one_dim("triv", {Cyc(1), Cyc(1)}, 1);
        one_dim("sign", {Cyc(-1), Cyc(-1)}, 1);
        {
            // pull back the standard representation of S3 along S4 -> S3
            // (action on the three pair partitions)
            auto pair_perm = [&](const Perm& g) {
                // partitions: 0 = {01|23}, 1 = {02|13}, 2 = {03|12}; a pair
                // determines the partition by the partner of the point 0
                auto pair_index = [](int a, int b) {
                    int partner = (a == 0 || b == 0) ? a + b : 6 - a - b;
                    return partner - 1;
                };
                Perm t(3);
                for (int other = 1; other <= 3; ++other) {
                    int from = pair_index(0, other);
                    int to = pair_index(g[0], g[static_cast<size_t>(other)]);
                    t[static_cast<size_t>(from)] = to;
                }
                return t;
            };
            out.emplace_back("plane", GroupRep(group, 1,
                                               {std2_of_perm3(pair_perm(group.generators()[0])),
                                                std2_of_perm3(pair_perm(group.generators()[1]))}));
        }
        out.emplace_back("std", GroupRep(group, 1, {stdrep_of_perm(group.generators()[0]),
                                                    stdrep_of_perm(group.generators()[1])}));
        {
            std::vector<Matrix<Cyc>> mats;
            for (const Perm& g : group.generators()) {
                Matrix<Cyc> m = stdrep_of_perm(g);
                if (perm_sign(g) < 0) m = m * Cyc(-1);
                mats.push_back(std::move(m));
            }
            out.emplace_back("std_sign", GroupRep(group, 1, mats));
        }
        return out;
    }
    throw InputError("no bundled irreducible representations for group: " + name);
}

}  // namespace weilform
