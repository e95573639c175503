// Acceptance gate for the library. Ten numbered end-to-end checks, each
// printing indented detail lines followed by exactly one verdict line of the
// form "criterion N: PASS (12.3s, budget 120s)". Every check carries a
// wall-clock budget and exceeding it fails the check. Run with
// --criterion <n> for a single check, with no arguments for all ten; the
// exit status is 0 exactly when every selected check passed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "matsuo/axial.hpp"
#include "matsuo/case_studies.hpp"
#include "matsuo/errors.hpp"
#include "matsuo/fischer.hpp"
#include "matsuo/linalg.hpp"
#include "matsuo/matsuo_algebra.hpp"
#include "matsuo/scalar.hpp"

using nlohmann::ordered_json;
using namespace matsuo;
using algebra::MatsuoAlgebra;
using spaces::Family;
using spaces::FischerSpace;

namespace {

struct Gate {
    bool ok = true;
    int checks = 0;

    void check(bool cond, const std::string& what) {
        ++checks;
        if (!cond) {
            ok = false;
            std::printf("    failed: %s\n", what.c_str());
        }
    }
    void note(const std::string& what) { std::printf("    %s\n", what.c_str()); }
};

double elapsed_s(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string istr(long long v) { return std::to_string(v); }

template <class K>
std::vector<K> dedup(const std::vector<K>& vals) {
    std::vector<K> out;
    std::set<std::string> seen;
    for (const K& v : vals)
        if (seen.insert(k_str(v)).second) out.push_back(v);
    return out;
}

template <class K>
std::set<std::string> value_keys(const std::vector<K>& vals) {
    std::set<std::string> r;
    for (const K& v : vals) r.insert(k_str(v));
    return r;
}

std::string join_keys(const std::set<std::string>& keys) {
    std::string r = "{";
    for (const auto& k : keys) {
        if (r.size() > 1) r += ", ";
        r += k;
    }
    return r + "}";
}

bool ratfunc_constant(const RatFunc& v) {
    return v.num().degree() <= 0 && v.den().degree() <= 0;
}

// permutation p of the points that maps lines to lines with matching wedges
bool wedge_preserving(const FischerSpace& g, const std::vector<int>& p) {
    const int n = g.points();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int w = g.wedge(i, j);
            const int pw = g.wedge(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
            if (w < 0 ? pw >= 0 : pw != p[static_cast<std::size_t>(w)]) return false;
        }
    return true;
}

// reflection about the point y: collinear x goes to the third line point
std::vector<int> point_flip(const FischerSpace& g, int y) {
    std::vector<int> p(static_cast<std::size_t>(g.points()));
    for (int x = 0; x < g.points(); ++x)
        p[static_cast<std::size_t>(x)] = g.collinear(x, y) ? g.wedge(x, y) : x;
    return p;
}

// witness check for an isomorphism claim between two spaces
bool iso_witness_ok(const FischerSpace& a, const FischerSpace& b, const std::vector<int>& p) {
    if (a.points() != b.points() || static_cast<int>(p.size()) != a.points()) return false;
    std::vector<char> hit(p.size(), 0);
    for (int v : p) {
        if (v < 0 || v >= b.points() || hit[static_cast<std::size_t>(v)]) return false;
        hit[static_cast<std::size_t>(v)] = 1;
    }
    for (int i = 0; i < a.points(); ++i)
        for (int j = i + 1; j < a.points(); ++j) {
            const int w = a.wedge(i, j);
            const int pw = b.wedge(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
            if (w < 0 ? pw >= 0 : pw != p[static_cast<std::size_t>(w)]) return false;
        }
    return true;
}

// fusion containment against a small symbol table: every eigenvalue must be
// tagged and every product must land inside the allowed tag set of its pair
template <class K>
bool fusion_in_table(const axial::FusionTable<K>& fus, const std::map<std::string, char>& tag,
                     const std::map<std::string, std::string>& allowed, std::string* why) {
    const std::size_t m = fus.eigenvalues.size();
    std::vector<char> t(m, '?');
    for (std::size_t i = 0; i < m; ++i) {
        auto it = tag.find(k_str(fus.eigenvalues[i]));
        if (it == tag.end()) {
            if (why) *why = "eigenvalue outside the table: " + k_str(fus.eigenvalues[i]);
            return false;
        }
        t[i] = it->second;
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            std::string key{std::min(t[i], t[j]), std::max(t[i], t[j])};
            auto it = allowed.find(key);
            if (it == allowed.end()) {
                if (why) *why = "no table row for tag pair " + key;
                return false;
            }
            for (int k : fus.rule[i][j])
                if (it->second.find(t[static_cast<std::size_t>(k)]) == std::string::npos) {
                    if (why)
                        *why = "product of tags " + key + " hits " +
                               k_str(fus.eigenvalues[static_cast<std::size_t>(k)]);
                    return false;
                }
        }
    return true;
}

// the point-axis table: products of the three eigenvalue classes
const std::map<std::string, std::string>& point_axis_table() {
    static const std::map<std::string, std::string> t = {{"11", "1"}, {"01", ""}, {"00", "0"},
                                                         {"1a", "a"}, {"0a", "a"}, {"aa", "01"}};
    return t;
}

template <class K>
MatX<K> one_zero_basis(const axial::Eigendecomposition<K>& d) {
    int cols = 0;
    for (const auto& s : d.spaces)
        if (s.value == K(1) || s.value == K(0)) cols += s.dim();
    MatX<K> out(d.ambient_dim, cols);
    int at = 0;
    for (const auto& s : d.spaces)
        if (s.value == K(1) || s.value == K(0)) {
            for (int c = 0; c < s.dim(); ++c) out.col(at + c) = s.basis.col(c);
            at += s.dim();
        }
    return out;
}

// ---------------------------------------------------------------------------
// criterion 1: integer adjacency spectra of the named families

bool criterion1(Gate& g) {
    const ordered_json rep = cases::run_spectra_tables(10, 8, 8);
    g.check(rep.at("verdict") == "pass", "spectra report verdict is pass");
    g.note("table cases: " + istr(static_cast<long long>(rep.at("cases").size())) +
           ", boundary degree rows: " +
           istr(static_cast<long long>(rep.at("boundary_degrees").size())));
    return g.ok;
}

// ---------------------------------------------------------------------------
// criterion 2: every point axis decomposes with values inside {1, 0, a},
// fusion inside the point-axis table, the two-sided unit condition on 1 and
// 0, and the sign grading with odd part {a}. One representative per space is
// analysed directly; the rest are covered by verified reflection symmetries
// that reach every point, plus one random directly-analysed cross check.

struct PointAxisFacts {
    bool diagonalisable = false;
    bool values_ok = false;
    bool one_dim_ok = false;
    bool fusion_ok = false;
    bool seress_ok = false;
    bool grading_ok = false;
    std::set<std::string> values;
    std::vector<int> dims;
    std::string detail;
};

PointAxisFacts point_axis_facts(const MatsuoAlgebra<RatFunc>& alg, int point) {
    PointAxisFacts f;
    const RatFunc a = alg.alpha();
    const std::vector<RatFunc> cand = {RatFunc(1), RatFunc(0), a};
    auto dec = axial::eigendecompose_with_candidates(alg, alg.point(point), cand);
    f.diagonalisable = dec.diagonalisable;
    f.values = value_keys(dec.values());
    for (const auto& s : dec.spaces) f.dims.push_back(s.dim());
    f.values_ok = true;
    for (const auto& v : dec.values())
        if (!(v == RatFunc(1) || v == RatFunc(0) || v == a)) f.values_ok = false;
    const int i1 = dec.index_of(RatFunc(1));
    f.one_dim_ok = i1 >= 0 && dec.spaces[static_cast<std::size_t>(i1)].dim() == 1;
    auto fus = axial::fusion_table(alg, dec);
    std::map<std::string, char> tag = {
        {k_str(RatFunc(1)), '1'}, {k_str(RatFunc(0)), '0'}, {k_str(a), 'a'}};
    std::string why;
    f.fusion_ok = fusion_in_table(fus, tag, point_axis_table(), &why);
    if (!f.fusion_ok) f.detail = why;
    f.seress_ok = axial::is_seress(fus).seress;
    if (dec.index_of(a) < 0) {
        f.grading_ok = true; // a absent, nothing to grade
    } else if (auto parts = axial::grading_partition(fus)) {
        std::set<std::string> odd;
        for (int i : parts->second) odd.insert(k_str(fus.eigenvalues[static_cast<std::size_t>(i)]));
        f.grading_ok = odd == std::set<std::string>{k_str(a)};
    }
    return f;
}

bool criterion2(Gate& g) {
    std::vector<std::pair<std::string, FischerSpace>> list;
    for (int n = 1; n <= 6; ++n)
        list.emplace_back("A" + istr(n), spaces::build_named(Family::A, n));
    for (int n = 4; n <= 6; ++n)
        list.emplace_back("D" + istr(n), spaces::build_named(Family::D, n));
    for (int n = 1; n <= 3; ++n)
        list.emplace_back("Aff3:" + istr(n), spaces::build_named(Family::Affine3, n));

    std::mt19937 rng(20260816u);
    for (const auto& [name, space] : list) {
        MatsuoAlgebra<RatFunc> alg(space, RatFunc::alpha());
        const auto rep = point_axis_facts(alg, 0);
        g.check(rep.diagonalisable, name + " point 0 diagonalisable");
        g.check(rep.values_ok, name + " point 0 values inside {1, 0, a}");
        g.check(rep.one_dim_ok, name + " point 0 has a one dimensional 1-eigenspace");
        g.check(rep.fusion_ok, name + " point 0 fusion inside the table " + rep.detail);
        g.check(rep.seress_ok, name + " point 0 products with the 1 and 0 eigenspaces stay put");
        g.check(rep.grading_ok, name + " point 0 sign grading with odd part {a}");

        // verified reflections reach every point, so the analysis transports
        // to every axis by conjugating with a symmetry of the algebra
        const int n = space.points();
        int verified = 0;
        std::vector<char> reached(static_cast<std::size_t>(n), 0);
        reached[0] = 1;
        std::vector<int> queue = {0};
        std::vector<std::optional<std::vector<int>>> flips(static_cast<std::size_t>(n));
        while (!queue.empty()) {
            const int x = queue.back();
            queue.pop_back();
            for (int y = 0; y < n; ++y) {
                if (!flips[static_cast<std::size_t>(y)]) {
                    auto p = point_flip(space, y);
                    if (!wedge_preserving(space, p)) {
                        g.check(false, name + " reflection about point " + istr(y));
                        continue;
                    }
                    ++verified;
                    flips[static_cast<std::size_t>(y)] = std::move(p);
                }
                const int z = (*flips[static_cast<std::size_t>(y)])[static_cast<std::size_t>(x)];
                if (!reached[static_cast<std::size_t>(z)]) {
                    reached[static_cast<std::size_t>(z)] = 1;
                    queue.push_back(z);
                }
            }
        }
        const bool all = std::all_of(reached.begin(), reached.end(), [](char c) { return c; });
        g.check(all, name + " reflections reach every point from point 0");

        if (n > 1) {
            std::uniform_int_distribution<int> pick(1, n - 1);
            const int other = pick(rng);
            const auto cross = point_axis_facts(alg, other);
            const bool same = cross.diagonalisable == rep.diagonalisable &&
                              cross.values == rep.values && cross.dims == rep.dims &&
                              cross.fusion_ok && cross.seress_ok && cross.grading_ok;
            g.check(same, name + " random point " + istr(other) + " matches point 0");
        }
        g.note(name + ": values " + join_keys(rep.values) + ", " + istr(verified) +
               " verified reflections cover all " + istr(n) + " points");
    }
    return g.ok;
}

// ---------------------------------------------------------------------------
// criterion 3: identities of nested letter-block subspaces. Unit law on the
// subalgebra, diagonalisability, 1-eigenspace equal to the span of the
// subspace, one dimensional 0-eigenspace, the remaining eigenvalues
// nonconstant in a and equal to the boundary-spectrum value set.

bool nested_identity_case(Gate& g, const std::string& name, const FischerSpace& big,
                          const std::vector<int>& h) {
    const RatFunc a = RatFunc::alpha();
    MatsuoAlgebra<RatFunc> alg(big, a);
    const auto axis = axial::decompose_parabolic(alg, h);
    const auto& dec = axis.decomposition;
    g.check(alg.is_idempotent(axis.element), name + " identity is idempotent");
    g.check(dec.diagonalisable, name + " identity diagonalisable");

    bool unit = true;
    for (int p : h)
        if (!algebra::vec_equal<RatFunc>(alg.multiply(axis.element, alg.point(p)), alg.point(p)))
            unit = false;
    g.check(unit, name + " unit law on every subspace point");

    const int i1 = dec.index_of(RatFunc(1));
    const int i0 = dec.index_of(RatFunc(0));
    g.check(i1 >= 0 && dec.spaces[static_cast<std::size_t>(i1)].dim() ==
                           static_cast<int>(h.size()),
            name + " 1-eigenspace dimension equals the subspace size");
    g.check(i0 >= 0 && dec.spaces[static_cast<std::size_t>(i0)].dim() == 1,
            name + " 0-eigenspace is one dimensional");

    bool nonconst = true;
    for (const auto& v : dec.values())
        if (!(v == RatFunc(1) || v == RatFunc(0)) && ratfunc_constant(v)) nonconst = false;
    g.check(nonconst, name + " eigenvalues other than 1 and 0 are nonconstant in a");

    // expected value set from the boundary: 1 together with
    // a*(k_out - mu)/(2 + a*k_in) over the boundary adjacency spectrum
    const auto bd = spaces::boundary_graph(big, h);
    bool const_deg = !bd.degree_to_h.empty();
    for (int d : bd.degree_to_h)
        if (d != bd.degree_to_h[0]) const_deg = false;
    g.check(const_deg, name + " constant boundary degree toward the subspace");
    const auto k_in = spaces::regularity(spaces::induced_subspace(big, h));
    g.check(k_in.has_value(), name + " subspace is regular");
    if (!const_deg || !k_in) return g.ok;
    const int k_out = bd.degree_to_h[0];

    std::set<std::string> expected = {k_str(RatFunc(1))};
    for (const auto& [mu, mult] : integer_spectrum(bd.adjacency)) {
        (void)mult;
        const RatFunc lam =
            a * (RatFunc(Rat(k_out)) - RatFunc(Rat(mu))) / (RatFunc(2) + a * RatFunc(*k_in));
        expected.insert(k_str(lam));
    }
    const auto got = value_keys(dec.values());
    g.check(got == expected, name + " eigenvalues equal the boundary value set");
    g.note(name + ": values " + join_keys(got));
    return g.ok;
}

bool criterion3(Gate& g) {
    for (int n = 2; n <= 7; ++n) {
        const FischerSpace big = spaces::build_named(Family::A, n);
        const auto h = spaces::letter_block_pairs(n + 1, n);
        nested_identity_case(g, "A" + istr(n - 1) + " in A" + istr(n), big, h);
    }
    for (int m = 5; m <= 7; ++m) {
        const FischerSpace big = spaces::build_named(Family::D, m);
        const int nb = big.points() / 2;
        auto h = spaces::letter_block_pairs(m, m - 1);
        const std::size_t half = h.size();
        for (std::size_t i = 0; i < half; ++i) h.push_back(h[i] + nb);
        nested_identity_case(g, "D" + istr(m - 1) + " in D" + istr(m), big, h);
    }
    return g.ok;
}

// ---------------------------------------------------------------------------
// criterion 4: the closure of the block identities under differences e - f
// with f a unit-multiple of e. Every element must be idempotent,
// diagonalisable, and keep the 1 and 0 eigenspaces multiplicatively inert.
// Seeds are analysed directly. A difference inherits diagonalisability from
// its parents when f is inert and both parents are diagonalisable, since the
// parent actions then commute, and it inherits inertness when its own 1 and
// 0 eigenspaces sit inside the joint 1,0 eigenspaces of both parents, which
// coset_inert_exact checks with exact arithmetic. Elements failing either
// certificate fall back to a full direct analysis, and a random sample of
// the certified ones is re-analysed directly as a cross check, together
// with an exact commutation check of the parent actions.

struct ElementState {
    std::vector<RatFunc> spec; // covering set for the eigenvalues
    bool diag = false;
    bool inert = false;
    bool direct = false;
};

struct DirectOutcome {
    bool ok = false;
    bool diag = false;
    bool inert = false;
    std::vector<RatFunc> values;
    std::string err;
};

DirectOutcome direct_analyze(const MatsuoAlgebra<RatFunc>& alg, const VecX<RatFunc>& el,
                             std::vector<RatFunc> cand) {
    cand.push_back(RatFunc(1));
    cand.push_back(RatFunc(0));
    cand.push_back(alg.alpha());
    cand = dedup(cand);
    DirectOutcome out;
    try {
        auto dec = axial::eigendecompose_with_candidates(alg, el, cand);
        auto fus = axial::fusion_table(alg, dec);
        out.ok = true;
        out.diag = dec.diagonalisable;
        out.inert = axial::is_seress(fus).seress;
        out.values = dec.values();
    } catch (const Error& e) {
        out.err = e.what();
    }
    return out;
}

// free screen over covering value sets of the parents: the condition rules
// out any joint eigenvalue pair that could push the 1,0 part of e - f
// outside the joint 1,0 part of e and f
bool coset_pair_condition(const std::vector<RatFunc>& se, const std::vector<RatFunc>& sf) {
    for (const auto& lam : se)
        for (const auto& mu : sf) {
            if (lam - mu == RatFunc(1) && !(lam == RatFunc(1) && mu == RatFunc(0))) return false;
            if (lam == mu && !(lam == RatFunc(1) || lam == RatFunc(0))) return false;
        }
    return true;
}

// exact inertness transfer to a difference g = e - f: every vector of the
// joint 1,0 eigenspace of g, which is the kernel of adg(adg - 1) whether or
// not g is diagonalisable, must lie in the joint 1,0 eigenspace of e and of
// f. For a diagonalisable parent p that containment is the relation
// p(pu - u) = 0, so the whole check runs on exact products, no spectra
template <class K>
bool coset_inert_exact(const MatsuoAlgebra<K>& alg, const VecX<K>& g, const VecX<K>& e,
                       const VecX<K>& f) {
    const MatX<K> adg = alg.ad_matrix(g);
    MatX<K> shifted = adg;
    for (int i = 0; i < alg.dim(); ++i) shifted(i, i) = shifted(i, i) - K(1);
    const MatX<K> joint = kernel_basis<K>(MatX<K>(adg * shifted));
    auto inside = [&](const VecX<K>& u, const VecX<K>& p) {
        const VecX<K> w = alg.multiply(p, u);
        const VecX<K> diff = w - u;
        const VecX<K> pw = alg.multiply(p, diff);
        for (int i = 0; i < alg.dim(); ++i)
            if (!(pw(i) == K(0))) return false;
        return true;
    };
    for (Eigen::Index c = 0; c < joint.cols(); ++c) {
        const VecX<K> u = joint.col(c);
        if (!inside(u, e) || !inside(u, f)) return false;
    }
    return true;
}

bool criterion4(Gate& g) {
    std::mt19937 rng(20260816u);
    for (int n = 2; n <= 5; ++n) {
        const FischerSpace base = spaces::build_named(Family::A, n);
        const FischerSpace dm = spaces::double_graph(base);
        const int nb = base.points();
        MatsuoAlgebra<RatFunc> alg(dm, RatFunc::alpha());
        const std::string name = "A" + istr(n) + "+-";

        // seeds: identities of the nested letter blocks in one copy and in
        // both copies, plus the algebra identity
        std::vector<axial::LinearIdempotent<RatFunc>> seeds;
        auto add_seed = [&](const std::vector<int>& h) {
            axial::LinearIdempotent<RatFunc> s;
            s.element = alg.parabolic_identity(h);
            for (auto sign : {axial::SignConvention::minus, axial::SignConvention::plus}) {
                try {
                    auto c = axial::id_spectrum_candidates(alg, h, sign);
                    s.candidates.insert(s.candidates.end(), c.begin(), c.end());
                } catch (const Error&) {
                }
            }
            s.candidates = dedup(s.candidates);
            seeds.push_back(std::move(s));
        };
        {
            axial::LinearIdempotent<RatFunc> s;
            s.element = alg.identity_element();
            s.candidates = {RatFunc(1), RatFunc(0)};
            seeds.push_back(std::move(s));
        }
        for (int i = 1; i <= n; ++i) {
            auto plus = spaces::letter_block_pairs(n + 1, i + 1);
            add_seed(plus);
            auto both = plus;
            for (int x : plus) both.push_back(x + nb);
            add_seed(both);
        }

        const auto t_start = std::chrono::steady_clock::now();
        const auto closure = axial::linear_idempotents(alg, std::move(seeds), 4);
        const double t_closure = elapsed_s(t_start);
        g.check(!closure.truncated, name + " closure finished under the depth cap");
        const int total = static_cast<int>(closure.elements.size());
        double t_seed = 0, t_cert = 0, t_fall = 0, t_cross = 0;

        int max_depth = 0, n_seeds = 0, n_screen = 0, n_exact = 0, n_fallback = 0;
        bool all_idem = true;
        std::vector<ElementState> st(static_cast<std::size_t>(total));
        std::vector<int> certified;
        for (int t = 0; t < total; ++t) {
            const auto& el = closure.elements[static_cast<std::size_t>(t)];
            max_depth = std::max(max_depth, el.depth);
            if (!alg.is_idempotent(el.element)) all_idem = false;
            auto& s = st[static_cast<std::size_t>(t)];
            if (el.parent_e < 0) {
                ++n_seeds;
                const auto t0 = std::chrono::steady_clock::now();
                auto out = direct_analyze(alg, el.element, el.candidates);
                t_seed += elapsed_s(t0);
                g.check(out.ok, name + " seed " + istr(t) + " analysis: " + out.err);
                s = {out.values, out.diag, out.inert, true};
                continue;
            }
            const auto& pe = st[static_cast<std::size_t>(el.parent_e)];
            const auto& pf = st[static_cast<std::size_t>(el.parent_f)];
            const auto t0 = std::chrono::steady_clock::now();
            std::vector<RatFunc> bound;
            for (const auto& x : pe.spec)
                for (const auto& y : pf.spec) bound.push_back(x - y);
            bound = dedup(bound);
            const bool diag_cert = pe.diag && pf.diag && pf.inert;
            bool inert_cert = false;
            if (diag_cert && pe.inert) {
                if (coset_pair_condition(pe.spec, pf.spec)) {
                    inert_cert = true;
                    ++n_screen;
                } else if (coset_inert_exact(
                               alg, el.element,
                               closure.elements[static_cast<std::size_t>(el.parent_e)].element,
                               closure.elements[static_cast<std::size_t>(el.parent_f)].element)) {
                    inert_cert = true;
                    ++n_exact;
                }
            }
            t_cert += elapsed_s(t0);
            if (diag_cert && inert_cert) {
                s = {bound, true, true, false};
                certified.push_back(t);
            } else {
                ++n_fallback;
                const auto t1 = std::chrono::steady_clock::now();
                std::vector<RatFunc> cand = bound;
                cand.insert(cand.end(), el.candidates.begin(), el.candidates.end());
                auto out = direct_analyze(alg, el.element, dedup(cand));
                t_fall += elapsed_s(t1);
                g.check(out.ok, name + " element " + istr(t) + " analysis: " + out.err);
                s = {out.values, out.diag, out.inert, true};
            }
        }
        g.check(all_idem, name + " every enumerated element is idempotent");
        bool all_diag = true, all_inert = true;
        for (const auto& s : st) {
            all_diag = all_diag && s.diag;
            all_inert = all_inert && s.inert;
        }
        g.check(all_diag, name + " every element diagonalisable");
        g.check(all_inert, name + " every element keeps the 1 and 0 eigenspaces inert");

        // cross check: re-derive a sample of certified elements directly and
        // confirm the parent actions commute exactly
        const int want = std::max(2, 8 - n);
        std::vector<int> sample = certified;
        std::shuffle(sample.begin(), sample.end(), rng);
        if (static_cast<int>(sample.size()) > want) sample.resize(static_cast<std::size_t>(want));
        const auto t_cv = std::chrono::steady_clock::now();
        for (int t : sample) {
            const auto& el = closure.elements[static_cast<std::size_t>(t)];
            const auto& s = st[static_cast<std::size_t>(t)];
            auto out = direct_analyze(alg, el.element, s.spec);
            bool covered = out.ok && out.diag && out.inert;
            if (covered) {
                const auto allowed = value_keys(s.spec);
                for (const auto& v : out.values)
                    if (!allowed.count(k_str(v))) covered = false;
            }
            g.check(covered, name + " certified element " + istr(t) + " agrees with direct analysis");
            const MatX<RatFunc> ae =
                alg.ad_matrix(closure.elements[static_cast<std::size_t>(el.parent_e)].element);
            const MatX<RatFunc> af =
                alg.ad_matrix(closure.elements[static_cast<std::size_t>(el.parent_f)].element);
            const MatX<RatFunc> lhs = ae * af;
            const MatX<RatFunc> rhs = af * ae;
            g.check(mat_equal<RatFunc>(lhs, rhs),
                    name + " parent actions of element " + istr(t) + " commute");
        }
        t_cross = elapsed_s(t_cv);
        g.note(name + ": " + istr(total) + " elements, max depth " + istr(max_depth) + ", " +
               istr(n_seeds) + " seeds, " + istr(n_screen) + " screened, " + istr(n_exact) +
               " exact certified, " + istr(n_fallback) + " direct fallbacks, " +
               istr(static_cast<long long>(sample.size())) + " cross checked");
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "%s timing: closure %.1fs, seeds %.1fs, certificates %.1fs, fallbacks "
                      "%.1fs, cross checks %.1fs",
                      name.c_str(), t_closure, t_seed, t_cert, t_fall, t_cross);
        g.note(buf);
    }
    return g.ok;
}

// ---------------------------------------------------------------------------
// criterion 5: the chain reports over the generic parameter

bool criterion5(Gate& g) {
    for (int n = 5; n <= 7; ++n) {
        const auto rep = cases::run_an_chain(n, Scalar(RatFunc::alpha()), Rat(1) / Rat(2));
        g.check(rep.at("verdict") == "pass", "chain report n=" + istr(n) + " verdict is pass");
        g.note("n=" + istr(n) + ": " + istr(static_cast<long long>(rep.at("steps").size())) +
               " steps, verdict " + rep.at("verdict").get<std::string>());
    }
    return g.ok;
}

// ---------------------------------------------------------------------------
// criterion 6: closed-form identities at the quarter parameter

bool criterion6(Gate& g) {
    const Rat a = Rat(1) / Rat(4);
    const Rat c = Rat(1) / Rat(2);
    auto R = [](long long p, long long q) { return Rat(p) / Rat(q); };
    for (long long i = 4; i <= 12; ++i) {
        const Rat i2 = Rat(i + 2), i3 = Rat(i + 3);
        g.check(cases::chain_step_cc(static_cast<int>(i), a, c) == Rat(1) - Rat(6) / (i2 * i3),
                "step charge at i=" + istr(i));
        g.check(cases::chain_lift_cc(static_cast<int>(i), a, c) == Rat(2 * i) / i3,
                "lift charge at i=" + istr(i));
        g.check(cases::chain_eta(static_cast<int>(i), a) == Rat(i + 1) / (Rat(2) * i3),
                "eta at i=" + istr(i));
        g.check(cases::chain_etahat(static_cast<int>(i), a) == Rat(i) / i3,
                "etahat at i=" + istr(i));
        g.check(Rat(1) - cases::chain_eta(static_cast<int>(i - 1), a) ==
                    Rat(i + 4) / (Rat(2) * i2),
                "one minus eta at i-1=" + istr(i - 1));
        g.check(cases::chain_eta(static_cast<int>(i), a) -
                        cases::chain_eta(static_cast<int>(i - 1), a) ==
                    Rat(1) / (i2 * i3),
                "eta step at i=" + istr(i));
        g.check(cases::chain_etahat(static_cast<int>(i), a) -
                        cases::chain_eta(static_cast<int>(i - 1), a) ==
                    Rat(i) * Rat(i + 1) / (Rat(2) * i2 * i3),
                "etahat minus eta at i=" + istr(i));
        g.check(cases::chain_etahat(static_cast<int>(i), a) -
                        cases::chain_etahat(static_cast<int>(i - 1), a) ==
                    Rat(3) / (i2 * i3),
                "etahat step at i=" + istr(i));
    }
    g.check(cases::chain_step_cc(4, a, c) == R(6, 7), "step charge lands on 6/7 at i=4");
    g.check(cases::chain_eta(4, a) == R(5, 14), "eta lands on 5/14 at i=4");
    g.check(cases::chain_eta(4, a) - cases::chain_eta(3, a) == R(1, 42),
            "eta step lands on 1/42 at i=4");
    // two circulating variants disagree with the computed values; record the
    // discrepancy instead of matching them
    g.check(cases::chain_lift_cc_index_shifted(4, a, c) != cases::chain_lift_cc(4, a, c),
            "index-shifted lift charge variant differs at i=4");
    g.check(Rat(4) * Rat(3) / (Rat(2) * Rat(6) * Rat(7)) !=
                cases::chain_etahat(4, a) - cases::chain_eta(3, a),
            "i(i-1) variant of the etahat minus eta form differs at i=4");
    g.note("lift charge variant with shifted denominators gives " +
           k_str(cases::chain_lift_cc_index_shifted(4, a, c)) + " at i=4, computed " +
           k_str(cases::chain_lift_cc(4, a, c)));
    g.note("i(i-1) numerator variant gives " + k_str(Rat(4) * Rat(3) / (Rat(2) * Rat(6) * Rat(7))) +
           " at i=4, computed " + k_str(cases::chain_etahat(4, a) - cases::chain_eta(3, a)));
    return g.ok;
}

// ---------------------------------------------------------------------------
// criterion 7: sign-flip involutions of the doubled spaces. The check at
// m=7 is expected to fail: the flips at cuts 3 and 4 share a signature and
// are exactly conjugate, so pairwise distinctness cannot hold there.

bool criterion7(Gate& g) {
    for (int m = 5; m <= 7; ++m) {
        const auto rep = cases::run_dn_involutions(m, Scalar(RatFunc::alpha()));
        const bool pass = rep.at("verdict") == "pass";
        g.check(pass, "doubled space m=" + istr(m) + " report verdict is pass");
        g.note("m=" + istr(m) + ": signatures distinct = " +
               (rep.at("signatures_distinct").get<bool>() ? "true" : "false"));
        for (const auto& level : rep.at("levels")) {
            const auto& sig = level.at("signature");
            g.note("  cut " + istr(level.at("i").get<int>()) + ": moved points " +
                   istr(sig.at("moved_points").get<int>()) + ", negative dimension " +
                   istr(sig.at("neg_dim").get<int>()));
        }
        for (const auto& col : rep.at("collisions")) {
            std::string line = "  collision between cuts " + istr(col.at("i").get<int>()) +
                               " and " + istr(col.at("j").get<int>());
            if (col.contains("conjugacy_verified"))
                line += col.at("conjugacy_verified").get<bool>()
                            ? ", conjugate by a verified letter permutation"
                            : ", conjugator check failed";
            g.note(line);
        }
        if (!pass && !rep.at("collisions").empty())
            g.note("  equal signatures with an exact conjugation witness rule out pairwise "
                   "distinctness at m=" +
                   istr(m));
    }
    return g.ok;
}

// ---------------------------------------------------------------------------
// criterion 8: doubling, boundary and quotient isomorphisms

FischerSpace sign_quotient(Gate& g, const std::string& name, const FischerSpace& base) {
    const FischerSpace dm = spaces::double_graph(base);
    const int nb = base.points();
    Eigen::MatrixXi qw = Eigen::MatrixXi::Constant(nb, nb, -1);
    bool consistent = true;
    for (int i = 0; i < nb; ++i) {
        if (dm.collinear(i, i + nb)) consistent = false;
        for (int j = 0; j < nb; ++j) {
            if (i == j) continue;
            int cls = -2; // -2 unseen, -1 must stay non-collinear
            for (int ei = 0; ei < 2; ++ei)
                for (int ej = 0; ej < 2; ++ej) {
                    const int x = i + ei * nb, y = j + ej * nb;
                    const int w = dm.wedge(x, y);
                    const int c = w < 0 ? -1 : w % nb;
                    if (cls == -2)
                        cls = c;
                    else if (cls != c)
                        consistent = false;
                }
            qw(i, j) = cls == -2 ? -1 : cls;
        }
    }
    g.check(consistent, name + " sign classes collapse consistently");
    return FischerSpace::from_wedge(qw);
}

bool criterion8(Gate& g) {
    for (int n = 3; n <= 6; ++n) {
        const FischerSpace lhs = spaces::double_graph(spaces::build_named(Family::A, n));
        const FischerSpace rhs = spaces::build_named(Family::D, n + 1);
        const auto w = spaces::isomorphic(lhs, rhs);
        g.check(w && iso_witness_ok(lhs, rhs, *w),
                "doubled A" + istr(n) + " is isomorphic to D" + istr(n + 1));
    }
    for (int n = 2; n <= 7; ++n) {
        const FischerSpace big = spaces::build_named(Family::A, n);
        const auto h = spaces::letter_block_pairs(n + 1, n);
        const auto bd = spaces::boundary_graph(big, h);
        const auto w = spaces::graph_isomorphic(bd.adjacency, spaces::complete_graph(n));
        bool ok = w.has_value();
        if (ok) {
            const auto& p = *w;
            const auto kn = spaces::complete_graph(n);
            for (int i = 0; ok && i < n; ++i)
                for (int j = 0; ok && j < n; ++j)
                    if (bd.adjacency(i, j) !=
                        kn(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]))
                        ok = false;
        }
        g.check(ok, "boundary of A" + istr(n - 1) + " in A" + istr(n) +
                        " is the complete graph on " + istr(n) + " points");
    }
    std::vector<std::pair<std::string, FischerSpace>> bases;
    bases.emplace_back("A3", spaces::build_named(Family::A, 3));
    bases.emplace_back("A4", spaces::build_named(Family::A, 4));
    bases.emplace_back("D4", spaces::build_named(Family::D, 4));
    for (const auto& [name, base] : bases) {
        const FischerSpace q = sign_quotient(g, name, base);
        const auto w = spaces::isomorphic(q, base);
        g.check(w && iso_witness_ok(q, base, *w),
                "sign quotient of doubled " + name + " is isomorphic to " + name);
    }
    g.note("doubling covers n=3..6, boundaries n=2..7, quotients A3, A4, D4");
    return g.ok;
}

// ---------------------------------------------------------------------------
// criterion 9: the very-regularity sweep over the named space families

bool criterion9(Gate& g) {
    const auto rep = cases::run_vreg_campaign(cases::VregPlan{}, 100000);
    g.check(rep.at("verdict") == "pass", "sweep verdict is pass");
    long long pairs = 0, subs = 0;
    for (const auto& entry : rep.at("spaces")) {
        if (entry.at("status") != "ok") {
            g.check(false, "space " + entry.at("space").get<std::string>() + " status " +
                               entry.at("status").get<std::string>());
            continue;
        }
        pairs += entry.at("maximal_pairs").get<long long>();
        subs += entry.at("connected_closed").get<long long>();
    }
    g.note(istr(static_cast<long long>(rep.at("spaces").size())) + " spaces, " + istr(subs) +
           " connected closed subspaces, " + istr(pairs) + " maximal pairs, zero failures");
    return g.ok;
}

// ---------------------------------------------------------------------------
// criterion 10: property suites with a fixed seed

void two_line_closures(Gate& g, std::mt19937& rng, const std::string& name,
                       const FischerSpace& space, const FischerSpace& ref6,
                       const FischerSpace& ref9) {
    const auto& lines = space.lines();
    std::vector<std::pair<int, int>> meeting;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            int common = 0;
            for (int a : lines[i])
                for (int b : lines[j])
                    if (a == b) ++common;
            if (common == 1) meeting.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    std::shuffle(meeting.begin(), meeting.end(), rng);
    if (meeting.size() > 15) meeting.resize(15);
    int six = 0, nine = 0;
    for (const auto& [i, j] : meeting) {
        std::vector<int> seed(lines[static_cast<std::size_t>(i)].begin(),
                              lines[static_cast<std::size_t>(i)].end());
        seed.insert(seed.end(), lines[static_cast<std::size_t>(j)].begin(),
                    lines[static_cast<std::size_t>(j)].end());
        const auto cl = spaces::subspace_closure(space, seed);
        const int sz = static_cast<int>(cl.size());
        g.check(sz == 6 || sz == 9, name + " two-line closure has 6 or 9 points");
        if (sz != 6 && sz != 9) continue;
        const FischerSpace ind = spaces::induced_subspace(space, cl);
        const FischerSpace& ref = sz == 6 ? ref6 : ref9;
        const auto w = spaces::isomorphic(ind, ref);
        g.check(w && iso_witness_ok(ind, ref, *w),
                name + " two-line closure is the expected plane on " + istr(sz) + " points");
        (sz == 6 ? six : nine) += 1;
    }
    g.note(name + ": " + istr(static_cast<long long>(meeting.size())) +
           " meeting line pairs closed, " + istr(six) + " six-point and " + istr(nine) +
           " nine-point planes");
}

template <class K>
void ring_laws(Gate& g, std::mt19937& rng, const std::string& name,
               const MatsuoAlgebra<K>& alg, int trials) {
    std::uniform_int_distribution<int> coef(-3, 3);
    const int n = alg.dim();
    auto rand_vec = [&] {
        VecX<K> v(n);
        for (int i = 0; i < n; ++i) v(i) = K(coef(rng));
        return v;
    };
    bool comm = true, dist = true, scal = true;
    for (int t = 0; t < trials; ++t) {
        const VecX<K> x = rand_vec(), y = rand_vec(), z = rand_vec();
        const K c = K(coef(rng));
        if (!algebra::vec_equal<K>(alg.multiply(x, y), alg.multiply(y, x))) comm = false;
        VecX<K> sum = x + y;
        VecX<K> lhs = alg.multiply(sum, z);
        VecX<K> rhs = alg.multiply(x, z) + alg.multiply(y, z);
        if (!algebra::vec_equal<K>(lhs, rhs)) dist = false;
        VecX<K> cx = c * x;
        VecX<K> l2 = alg.multiply(cx, y);
        VecX<K> r2 = c * alg.multiply(x, y);
        if (!algebra::vec_equal<K>(l2, r2)) scal = false;
    }
    g.check(comm, name + " multiplication commutes");
    g.check(dist, name + " multiplication distributes over addition");
    g.check(scal, name + " multiplication is homogeneous in scalars");
}

void inert_equivalence(Gate& g, int& agreed, int& skipped, const std::string& what,
                       const MatsuoAlgebra<RatFunc>& alg, const VecX<RatFunc>& e,
                       const std::vector<RatFunc>& cand) {
    try {
        auto dec = axial::eigendecompose_with_candidates(alg, e, cand);
        auto fus = axial::fusion_table(alg, dec);
        const bool lhs = axial::associates_check(alg, e, one_zero_basis(dec));
        const bool rhs = axial::is_seress(fus).seress;
        g.check(lhs == rhs, what + " associativity probe equals the inertness verdict");
        ++agreed;
    } catch (const Error& err) {
        g.note(what + " skipped: " + std::string(err.what()));
        ++skipped;
    }
}

void inert_equivalence_rat(Gate& g, int& agreed, int& skipped, const std::string& what,
                           const MatsuoAlgebra<Rat>& alg, const VecX<Rat>& e) {
    try {
        auto dec = axial::eigendecompose(alg, e);
        auto fus = axial::fusion_table(alg, dec);
        const bool lhs = axial::associates_check(alg, e, one_zero_basis(dec));
        const bool rhs = axial::is_seress(fus).seress;
        g.check(lhs == rhs, what + " associativity probe equals the inertness verdict");
        ++agreed;
    } catch (const Error& err) {
        g.note(what + " skipped: " + std::string(err.what()));
        ++skipped;
    }
}

void far_complement_stability(Gate& g, std::mt19937& rng, const std::string& name,
                              const FischerSpace& space) {
    auto subs = spaces::connected_closed_subspaces(space, 100000);
    std::shuffle(subs.begin(), subs.end(), rng);
    if (subs.size() > 25) subs.resize(25);
    int checked = 0;
    for (const auto& h : subs) {
        std::vector<char> in_h(static_cast<std::size_t>(space.points()), 0);
        for (int x : h) in_h[static_cast<std::size_t>(x)] = 1;
        std::vector<int> far;
        std::vector<char> in_far(static_cast<std::size_t>(space.points()), 0);
        for (int y = 0; y < space.points(); ++y) {
            if (in_h[static_cast<std::size_t>(y)]) continue;
            bool near = false;
            for (int x : h)
                if (space.collinear(y, x)) near = true;
            if (!near) {
                far.push_back(y);
                in_far[static_cast<std::size_t>(y)] = 1;
            }
        }
        bool stable = true;
        for (std::size_t i = 0; i < far.size(); ++i)
            for (std::size_t j = i + 1; j < far.size(); ++j) {
                const int w = space.wedge(far[i], far[j]);
                if (w >= 0 && !in_far[static_cast<std::size_t>(w)]) stable = false;
            }
        g.check(stable, name + " far complement closed under wedges");
        ++checked;
    }
    g.note(name + ": far complements of " + istr(checked) + " sampled closed subspaces stable");
}

bool criterion10(Gate& g) {
    std::mt19937 rng(20260816u);

    // two meeting lines always close into one of the two small planes
    const FischerSpace ref6 = spaces::build_named(Family::A, 3);
    const FischerSpace ref9 = spaces::build_named(Family::Affine3, 2);
    two_line_closures(g, rng, "A5", spaces::build_named(Family::A, 5), ref6, ref9);
    two_line_closures(g, rng, "D5", spaces::build_named(Family::D, 5), ref6, ref9);
    two_line_closures(g, rng, "Aff3:2", spaces::build_named(Family::Affine3, 2), ref6, ref9);
    two_line_closures(g, rng, "W3A:2", spaces::build_named(Family::W3AffineA, 2), ref6, ref9);

    // commutative bilinear product, over exact rationals and generically
    {
        const FischerSpace a4 = spaces::build_named(Family::A, 4);
        MatsuoAlgebra<Rat> alg_q(a4, Rat(1) / Rat(4));
        ring_laws(g, rng, "A4 over the rationals", alg_q, 20);
        MatsuoAlgebra<RatFunc> alg_f(a4, RatFunc::alpha());
        ring_laws(g, rng, "A4 generically", alg_f, 4);
    }

    // the associativity probe agrees with the fusion-side inertness verdict
    {
        int agreed = 0, skipped = 0;
        const FischerSpace a4 = spaces::build_named(Family::A, 4);
        MatsuoAlgebra<RatFunc> alg(a4, RatFunc::alpha());
        const std::vector<RatFunc> base = {RatFunc(1), RatFunc(0), RatFunc::alpha()};
        for (int p = 0; p < alg.dim(); ++p)
            inert_equivalence(g, agreed, skipped, "A4 point " + istr(p), alg, alg.point(p), base);
        for (int i = 2; i <= 4; ++i) {
            const auto h = spaces::letter_block_pairs(5, i);
            auto axis = axial::decompose_parabolic(alg, h);
            auto fus = axial::fusion_table(alg, axis.decomposition);
            const bool lhs = axial::associates_check(alg, axis.element,
                                                     one_zero_basis(axis.decomposition));
            g.check(lhs == axial::is_seress(fus).seress,
                    "A4 block " + istr(i) + " associativity probe equals the inertness verdict");
            ++agreed;
        }
        inert_equivalence(g, agreed, skipped, "A4 identity", alg, alg.identity_element(), base);

        const FischerSpace d5 = spaces::build_named(Family::D, 5);
        MatsuoAlgebra<RatFunc> alg_d(d5, RatFunc::alpha());
        inert_equivalence(g, agreed, skipped, "D5 point", alg_d, alg_d.point(0), base);
        for (int i = 3; i <= 4; ++i) {
            auto h = spaces::letter_block_pairs(5, i);
            const std::size_t half = h.size();
            for (std::size_t t = 0; t < half; ++t) h.push_back(h[t] + d5.points() / 2);
            auto axis = axial::decompose_parabolic(alg_d, h);
            auto fus = axial::fusion_table(alg_d, axis.decomposition);
            const bool lhs = axial::associates_check(alg_d, axis.element,
                                                     one_zero_basis(axis.decomposition));
            g.check(lhs == axial::is_seress(fus).seress,
                    "D5 double block " + istr(i) +
                        " associativity probe equals the inertness verdict");
            ++agreed;
        }

        const FischerSpace a3 = spaces::build_named(Family::A, 3);
        MatsuoAlgebra<Rat> alg_p1(a3, Rat(1));
        inert_equivalence_rat(g, agreed, skipped, "A3 at parameter 1", alg_p1, alg_p1.point(0));
        MatsuoAlgebra<Rat> alg_m1(a3, Rat(-1));
        inert_equivalence_rat(g, agreed, skipped, "A3 at parameter -1", alg_m1, alg_m1.point(0));
        MatsuoAlgebra<Rat> alg_t(a4, Rat(1) / Rat(3));
        inert_equivalence_rat(g, agreed, skipped, "A4 at parameter 1/3", alg_t, alg_t.point(0));
        inert_equivalence_rat(g, agreed, skipped, "A4 block at parameter 1/3", alg_t,
                              alg_t.parabolic_identity(spaces::letter_block_pairs(5, 3)));
        g.note("inertness equivalence: " + istr(agreed) + " agreed, " + istr(skipped) +
               " skipped");
    }

    // points never collinear with a closed subspace close among themselves
    far_complement_stability(g, rng, "A5", spaces::build_named(Family::A, 5));
    far_complement_stability(g, rng, "D5", spaces::build_named(Family::D, 5));
    far_complement_stability(g, rng, "Aff3:2", spaces::build_named(Family::Affine3, 2));

    // the top adjacency eigenvalue of a connected regular space is its degree
    {
        std::vector<std::pair<std::string, FischerSpace>> list;
        list.emplace_back("A5", spaces::build_named(Family::A, 5));
        list.emplace_back("A6", spaces::build_named(Family::A, 6));
        list.emplace_back("D5", spaces::build_named(Family::D, 5));
        list.emplace_back("D6", spaces::build_named(Family::D, 6));
        list.emplace_back("Aff3:3", spaces::build_named(Family::Affine3, 3));
        list.emplace_back("W3A:3", spaces::build_named(Family::W3AffineA, 3));
        for (const auto& [name, space] : list) {
            const auto reg = spaces::regularity(space);
            g.check(reg.has_value(), name + " is regular");
            if (!reg) continue;
            const auto spec = integer_spectrum(spaces::adjacency(space));
            Int top = spec.front().first;
            for (const auto& [v, m] : spec) {
                (void)m;
                top = std::max(top, v);
            }
            g.check(top == Int(*reg), name + " top adjacency eigenvalue equals the degree");
        }
        for (int n = 5; n <= 8; ++n) {
            const auto spec = integer_spectrum(spaces::complete_graph(n));
            bool ok = spec.size() == 2;
            for (const auto& [v, m] : spec)
                if (!((v == Int(n - 1) && m == 1) || (v == Int(-1) && m == n - 1))) ok = false;
            g.check(ok, "complete graph on " + istr(n) + " points has the two-value spectrum");
        }
    }
    return g.ok;
}

struct Criterion {
    int id;
    const char* title;
    bool (*run)(Gate&);
    double budget;
};

const Criterion kCriteria[] = {
    {1, "integer adjacency spectra of the named families", criterion1, 10},
    {2, "point-axis analysis carried across each space by verified symmetries", criterion2, 120},
    {3, "nested block identities and their coset value sets", criterion3, 300},
    {4, "closure of block identities under axis differences", criterion4, 600},
    {5, "chain identities in the doubled pair spaces", criterion5, 600},
    {6, "closed-form identities at the quarter parameter", criterion6, 1},
    {7, "sign-flip involutions of the doubled spaces", criterion7, 600},
    {8, "doubling, boundary and quotient isomorphisms", criterion8, 120},
    {9, "very-regularity sweep over the named families", criterion9, 900},
    {10, "property suites with a fixed seed", criterion10, 300},
};

} // namespace

int main(int argc, char** argv) {
    std::setvbuf(stdout, nullptr, _IONBF, 0);
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[i + 1]);
            ++i;
        } else {
            std::fprintf(stderr, "usage: %s [--criterion <1..10>]\n", argv[0]);
            return 2;
        }
    }
    if (only < 0 || only > 10) {
        std::fprintf(stderr, "criterion number must be between 1 and 10\n");
        return 2;
    }

    bool all_ok = true;
    for (const auto& c : kCriteria) {
        if (only != 0 && c.id != only) continue;
        std::printf("[criterion %d] %s\n", c.id, c.title);
        std::fflush(stdout);
        const auto t0 = std::chrono::steady_clock::now();
        Gate gate;
        try {
            c.run(gate);
        } catch (const std::exception& e) {
            gate.check(false, std::string("unhandled error: ") + e.what());
        }
        const double dt = elapsed_s(t0);
        const bool in_budget = dt <= c.budget;
        if (!in_budget)
            std::printf("    failed: exceeded the %.0fs budget\n", c.budget);
        const bool ok = gate.ok && in_budget;
        std::printf("criterion %d: %s (%.1fs, budget %.0fs)\n", c.id, ok ? "PASS" : "FAIL", dt,
                    c.budget);
        std::fflush(stdout);
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
