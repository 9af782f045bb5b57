#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "surf10/field.hpp"

namespace surf10 {

/// Where a point configuration lives: the projective plane, or a Hirzebruch
/// surface F_e (recorded together with e).
enum class Ambient { Plane, Hirzebruch };

/// A deterministic batch of random points. Plane points are projective
/// coordinate triples stored in a canonical scaling (first nonzero coordinate
/// is 1), so equal tuples mean equal points. Hirzebruch points are pairs of
/// nonzero torus coordinates for the dense chart of F_e, which keeps every
/// point away from the coordinate curves where the chart degenerates.
struct PointConfig {
    Ambient ambient = Ambient::Plane;
    int e = 0;  // meaningful only for Ambient::Hirzebruch
    std::vector<std::vector<uint32_t>> points;
    uint64_t seed = 0;
};

/// count pairwise-distinct points, reproducible from the seed. Genericity
/// beyond distinctness is not promised here; callers verify the expected
/// dimension of the linear systems they build and retry with a fresh seed on
/// failure.
inline PointConfig random_points(Ambient ambient, int e, int count, uint64_t seed,
                                 const PrimeField& F) {
    if (count < 1) throw std::invalid_argument("points: count must be positive");
    std::mt19937_64 rng(seed);
    auto draw = [&]() { return static_cast<uint32_t>(rng() % F.p()); };
    auto draw_nonzero = [&]() {
        return static_cast<uint32_t>(1 + rng() % (F.p() - 1));
    };
    PointConfig cfg;
    cfg.ambient = ambient;
    cfg.e = ambient == Ambient::Hirzebruch ? e : 0;
    cfg.seed = seed;
    std::set<std::vector<uint32_t>> seen;
    while (cfg.points.size() < static_cast<size_t>(count)) {
        std::vector<uint32_t> pt;
        if (ambient == Ambient::Plane) {
            pt = {draw(), draw(), draw()};
            size_t first = 0;
            while (first < 3 && pt[first] == 0) ++first;
            if (first == 3) continue;  // the zero triple is not a point
            uint32_t inv = F.inv(pt[first]);
            for (uint32_t& c : pt) c = F.mul(c, inv);
        } else {
            pt = {draw_nonzero(), draw_nonzero()};
        }
        if (seen.insert(pt).second) cfg.points.push_back(std::move(pt));
    }
    return cfg;
}

inline PointConfig random_plane_points(int count, uint64_t seed, const PrimeField& F) {
    return random_points(Ambient::Plane, 0, count, seed, F);
}

inline PointConfig random_torus_points(int e, int count, uint64_t seed, const PrimeField& F) {
    return random_points(Ambient::Hirzebruch, e, count, seed, F);
}

} // namespace surf10
