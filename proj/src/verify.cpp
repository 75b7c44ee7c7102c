#include "korb/verify.hpp"

#include <array>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "korb/eichler.hpp"
#include "korb/smith.hpp"

namespace korb {

namespace {

constexpr int kMaxCounterexamples = 20;

void record(SuiteResult& res, const std::string& msg) {
    res.passed = false;
    if ((int)res.counterexamples.size() < kMaxCounterexamples) res.counterexamples.push_back(msg);
}

std::string vec_str(const ZVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i].get_str();
    }
    os << ")";
    return os.str();
}

}  // namespace

SuiteResult verify_transvections(int n, long long count, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (count < 1) throw std::invalid_argument("count must be positive");
    SuiteResult res;
    res.suite = "transvections";

    GramLattice u = hyperbolic_u();
    GramLattice L = direct_sum(direct_sum(u, u), rank_one(-2 * (Int(n) + 1)));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(-4, 4);
    auto random_vec = [&]() {
        ZVec v(5);
        for (auto& c : v) c = coord(rng);
        return v;
    };

    long long attempts = 0;
    while (res.checked < count) {
        if (++attempts > 1000 * count + 100000) {
            record(res, "random sampler failed to produce enough transvections");
            break;
        }
        ZVec e = random_vec();
        if (is_zero(e) || L.q(e) != 0) continue;
        ZVec a;
        bool found = false;
        for (int tries = 0; tries < 200 && !found; ++tries) {
            a = random_vec();
            found = L.inner(e, a) == 0;
        }
        if (!found) continue;
        try {
            Isometry iso = transvection(L, e, a);
            bool good = iso.det == 1 && iso.disc_action.is_trivial() && iso.orientation == 1 &&
                        preserves_gram(L, iso.mat) && apply_isometry(iso, e) == e;
            if (!good) record(res, "transvection postcondition failed at e=" + vec_str(e) + " a=" + vec_str(a));
        } catch (const std::exception& ex) {
            record(res, std::string("transvection threw: ") + ex.what() + " at e=" + vec_str(e));
        }
        ++res.checked;
    }
    return res;
}

SuiteResult verify_faithfulness(int n, int bound) {
    if (n < 2) throw std::invalid_argument("faithfulness suite assumes n > 1");
    if (bound < 1) throw std::invalid_argument("bound must be at least 1");
    SuiteResult res;
    res.suite = "faithfulness";

    GramLattice L = kummer_lattice(n);
    ZMat refl = ZMat::identity(7);
    refl.at(6, 6) = -1;
    const long long period = 2 * n + 2;

    struct Group {
        PolarizationType type;
        ZVec target;
        DiscClass target_class;
        ZVec canonical;
        ZMat inv_chain;
        SaturatedPairInvariant sat;
        ZVec first;
        ZMat first_mono;
        long long size = 0;
    };
    std::map<std::array<long long, 4>, Group> groups;

    const int b = bound;
    std::array<long long, 7> c{};
    for (c[0] = -b; c[0] <= b; ++c[0])
    for (c[1] = -b; c[1] <= b; ++c[1])
    for (c[2] = -b; c[2] <= b; ++c[2])
    for (c[3] = -b; c[3] <= b; ++c[3])
    for (c[4] = -b; c[4] <= b; ++c[4])
    for (c[5] = -b; c[5] <= b; ++c[5])
    for (c[6] = -b; c[6] <= b; ++c[6]) {
        long long q2 = 2 * (c[0] * c[1] + c[2] * c[3] + c[4] * c[5]) - period * c[6] * c[6];
        if (q2 <= 0) continue;
        long long g = 0;
        for (long long ci : c) g = std::gcd(g, ci);
        if (g != 1) continue;
        ZVec h(7);
        for (int i = 0; i < 7; ++i) h[i] = (long)c[i];
        ++res.checked;

        PolarizationType p = normal_form(n, h);
        std::array<long long, 4> key{p.t.get_si(), p.beta.get_si(), p.d_prime.get_si(), q2};
        Group& grp = groups[key];
        if (grp.size == 0) {
            grp.type = p;
            grp.target = realize(p);
            grp.target_class = disc_class(L, grp.target);
            ReductionResult rt = reduce_to_canonical(L, grp.target);
            Isometry it = make_isometry(L, rt.g);
            if (!(it.det == 1 && it.disc_action.is_trivial() && it.orientation == 1))
                record(res, "target chain outside the transvection subgroup for " + vec_str(grp.target));
            grp.canonical = rt.canonical;
            grp.inv_chain = rt.g.unimodular_inverse();
            grp.sat = saturation_invariant(n, grp.target);
        }

        SaturatedPairInvariant si = saturation_invariant(n, h);
        if (!(si == grp.sat)) record(res, "saturation invariant differs inside one orbit at " + vec_str(h));

        DiscClass cls = disc_class(L, h);
        bool fold = cls != grp.target_class;
        ZVec h2 = h;
        if (fold) {
            h2[6] = -h2[6];
            if (disc_class(L, h2) != grp.target_class) {
                record(res, "reflection does not align the class of " + vec_str(h));
                ++grp.size;
                continue;
            }
        }
        ZMat mono;
        try {
            ReductionResult rv = reduce_to_canonical(L, h2);
            Isometry iv = make_isometry(L, rv.g);
            if (!(iv.det == 1 && iv.disc_action.is_trivial() && iv.orientation == 1))
                record(res, "reduction chain outside the transvection subgroup at " + vec_str(h));
            if (rv.canonical != grp.canonical)
                record(res, "canonical representatives disagree at " + vec_str(h));
            mono = grp.inv_chain * rv.g;
            if (fold) mono = mono * refl;
        } catch (const std::exception& ex) {
            record(res, std::string("reduction threw: ") + ex.what() + " at " + vec_str(h));
            ++grp.size;
            continue;
        }
        if (mono * h != grp.target) record(res, "monodromy misses the normal form at " + vec_str(h));
        if (grp.first.empty()) {
            grp.first = h;
            grp.first_mono = mono;
        }
        ++grp.size;

        // explicit spot checks with the full isometry machinery
        if (res.checked % 997 == 0) {
            Isometry gm = make_isometry(L, mono);
            if (!is_monodromy(gm)) record(res, "composite to the normal form is not a monodromy at " + vec_str(h));
            ZMat pair_m = grp.first_mono.unimodular_inverse() * mono;
            Isometry gp = make_isometry(L, pair_m);
            if (!is_monodromy(gp) || apply_isometry(gp, h) != grp.first)
                record(res, "pair monodromy failed between " + vec_str(h) + " and " + vec_str(grp.first));
        }
    }

    // orbits with equal square must have distinct faithful invariants
    std::map<long long, std::vector<const Group*>> by_square;
    for (const auto& [key, grp] : groups) by_square[key[3]].push_back(&grp);
    for (const auto& [sq, list] : by_square) {
        for (size_t i = 0; i < list.size(); ++i)
            for (size_t j = i + 1; j < list.size(); ++j)
                if (list[i]->sat == list[j]->sat)
                    record(res, "two orbits of square " + std::to_string(sq) + " share the faithful invariant");
    }
    return res;
}

SuiteResult verify_coverage(int n, const Int& d_max) {
    SuiteResult res;
    res.suite = "coverage";
    CoverageReport report = coverage(n, d_max);
    res.checked = (long long)report.types.size();
    for (const CoverageEntry& e : report.types) {
        if (e.status == CoverageStatus::gap)
            record(res, "no witness for type (t=" + e.t.get_str() + ", beta=" + e.beta.get_str() +
                            ") at n=" + std::to_string(n));
    }
    return res;
}

SuiteResult verify_snf(int dim, int entry_bound, long long count, std::uint64_t seed) {
    if (dim < 1 || entry_bound < 1 || count < 1)
        throw std::invalid_argument("snf suite needs positive dimension, bound and count");
    SuiteResult res;
    res.suite = "snf";
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(-entry_bound, entry_bound);
    for (long long it = 0; it < count; ++it) {
        ZMat m(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) m.at(i, j) = coord(rng);
        SmithDecomposition s = smith_normal_form(m);
        bool good = true;
        Int dl = s.left.det(), dr = s.right.det();
        if ((dl != 1 && dl != -1) || (dr != 1 && dr != -1)) good = false;
        if (s.left * m * s.right != s.diag) good = false;
        Int prev = 0;
        bool seen_zero = false;
        for (int i = 0; i < dim && good; ++i) {
            const Int& d = s.diag.at(i, i);
            if (d < 0) good = false;
            if (d == 0) seen_zero = true;
            else if (seen_zero) good = false;  // zeros must trail
            else if (prev != 0 && !divides(prev, d)) good = false;
            prev = d;
        }
        for (int i = 0; i < dim && good; ++i)
            for (int j = 0; j < dim; ++j)
                if (i != j && s.diag.at(i, j) != 0) good = false;
        if (!good) record(res, "smith decomposition postcondition failed on a random matrix (iteration " +
                                   std::to_string(it) + ")");
        ++res.checked;
    }
    return res;
}

}  // namespace korb
