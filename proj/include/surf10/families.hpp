#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "surf10/hilbert.hpp"
#include "surf10/implicitize.hpp"
#include "surf10/linsys.hpp"
#include "surf10/points.hpp"

namespace surf10 {

/// A constructed degree-10 surface in P^5: the saturated ideal, the linear
/// system that produced it, its intersection numbers, and enough provenance
/// (prime, seed that succeeded, attempts used) to reproduce it exactly.
struct SurfaceModel {
    Ideal ideal;                   // 6 variables
    PlaneSpec spec;
    BlowupInvariants inv;
    std::vector<HomogPoly> forms;  // the 6 forms defining the map
    uint32_t prime = 0;
    uint64_t seed = 0;           // seed requested by the caller
    uint64_t accepted_seed = 0;  // seed of the accepted attempt
    int attempts = 0;
};

/// The six rational families, keyed by K^2 of the embedded surface
/// (the identifier used throughout): K^2 = -6, ..., -1.
inline PlaneSpec family_spec(int k2) {
    auto rep = [](int m, int count, std::vector<int>& v) {
        for (int i = 0; i < count; ++i) v.push_back(m);
    };
    PlaneSpec s;
    switch (k2) {
        case -6:
            s.b0 = 5;
            rep(1, 15, s.mults);
            break;
        case -5:
            s.b0 = 6;
            rep(2, 4, s.mults);
            rep(1, 10, s.mults);
            break;
        case -4:
            s.b0 = 7;
            rep(3, 1, s.mults);
            rep(2, 6, s.mults);
            rep(1, 6, s.mults);
            break;
        case -3:
            s.b0 = 7;
            rep(2, 9, s.mults);
            rep(1, 3, s.mults);
            break;
        case -2:
            s.b0 = 9;
            rep(3, 6, s.mults);
            rep(2, 4, s.mults);
            rep(1, 1, s.mults);
            break;
        case -1:
            s.b0 = 10;
            rep(3, 10, s.mults);
            break;
        default:
            throw std::invalid_argument("families: K^2 must lie in [-6, -1]");
    }
    return s;
}

inline const std::vector<int>& family_ids() {
    static const std::vector<int> ids{-6, -5, -4, -3, -2, -1};
    return ids;
}

/// Construct one family member: random points, the 6-dimensional linear
/// system, implicitization in degree 3, saturation, and acceptance checks
/// (exactly 10 cubic generators; Hilbert numerator 1 - 10t^3 + 15t^4 - 6t^5,
/// which pins degree 10 and sectional genus 6). Non-generic draws are
/// retried with consecutive seeds; the resolution shape itself is verified
/// by callers, not here.
inline SurfaceModel construct_family(int k2, uint64_t seed, const PrimeField& F,
                                     int max_retries = 20) {
    PlaneSpec spec = family_spec(k2);
    const std::vector<int64_t> expected_numerator{1, 0, 0, -10, 15, -6};
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        uint64_t sub = seed + static_cast<uint64_t>(attempt);
        PointConfig cfg = random_plane_points(static_cast<int>(spec.mults.size()), sub, F);
        std::vector<HomogPoly> forms;
        try {
            forms = plane_system_basis(spec, cfg, F);
        } catch (const std::runtime_error&) {
            continue;  // points not general
        }
        Ideal I = implicitize(forms, 3, F);
        if (I.gens().size() != 10) continue;
        bool cubic = true;
        for (const HomogPoly& g : I.gens()) cubic = cubic && g.degree() == 3;
        if (!cubic) continue;
        HilbertData hd = hilbert_series(I, F, 7);
        if (hd.numerator != expected_numerator) continue;
        SurfaceModel m;
        m.ideal = std::move(I);
        m.spec = spec;
        m.inv = blowup_invariants(spec);
        m.forms = std::move(forms);
        m.prime = F.p();
        m.seed = seed;
        m.accepted_seed = sub;
        m.attempts = attempt + 1;
        return m;
    }
    throw std::runtime_error("families: genericity retries exhausted");
}

/// The candidate linear systems ruled out by lying on a quadric
/// (h^0 of the twisted ideal sheaf at 2 equals 1 instead of 0).
struct RejectedFamily {
    std::string name;
    std::variant<PlaneSpec, HirzebruchSpec> spec;
};

inline std::vector<RejectedFamily> rejected_families() {
    auto rep = [](int m, int count, std::vector<int>& v) {
        for (int i = 0; i < count; ++i) v.push_back(m);
    };
    std::vector<RejectedFamily> out;
    {
        HirzebruchSpec h{0, 4, 3, {}};
        rep(1, 14, h.mults);
        out.push_back({"F0(4,3;1^14)", h});
    }
    {
        PlaneSpec p{9, {}};
        rep(3, 7, p.mults);
        rep(2, 1, p.mults);
        rep(1, 4, p.mults);
        out.push_back({"(9;3^7,2,1^4)", p});
    }
    {
        HirzebruchSpec h{0, 4, 6, {}};
        rep(2, 9, h.mults);
        rep(1, 2, h.mults);
        out.push_back({"F0(4,6;2^9,1^2)", h});
    }
    {
        HirzebruchSpec h{1, 4, 8, {}};
        rep(2, 9, h.mults);
        rep(1, 2, h.mults);
        out.push_back({"F1(4,8;2^9,1^2)", h});
    }
    {
        PlaneSpec p{8, {}};
        rep(3, 2, p.mults);
        rep(2, 9, p.mults);
        out.push_back({"(8;3^2,2^9)", p});
    }
    return out;
}

/// The saturated ideal of quadrics through the image of a rejected family's
/// map. The construction retries non-generic draws until the system has the
/// expected dimension 6 and the quadric space is 1-dimensional.
inline Ideal rejected_family_quadrics(const RejectedFamily& rf, uint64_t seed,
                                      const PrimeField& F, int max_retries = 10) {
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        uint64_t sub = seed + static_cast<uint64_t>(attempt);
        try {
            Ideal I({}, 6);
            if (const PlaneSpec* p = std::get_if<PlaneSpec>(&rf.spec)) {
                PointConfig cfg = random_plane_points(static_cast<int>(p->mults.size()), sub, F);
                I = implicitize(plane_system_basis(*p, cfg, F), 2, F);
            } else {
                const HirzebruchSpec& h = std::get<HirzebruchSpec>(rf.spec);
                PointConfig cfg =
                    random_torus_points(h.e, static_cast<int>(h.mults.size()), sub, F);
                I = implicitize(hirzebruch_system_basis(h, cfg, F), 2, F);
            }
            if (I.gens().size() == 1) return I;
        } catch (const std::runtime_error&) {
            // points not general; fall through to the next seed
        }
    }
    throw std::runtime_error("families: genericity retries exhausted");
}

} // namespace surf10
