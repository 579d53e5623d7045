#pragma once

// Grid laser puzzles: ray tracing on a 16-direction lattice, per-phase
// element reachability, the chained-copy solvability check and a brute-force
// configuration oracle, plus the directed-connectivity level builder.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "hardgame/instances.hpp"
#include "hardgame/oracle.hpp"

namespace hardgame::ray {

enum class Kind : std::uint8_t { Empty, Opaque, Reflecting, Mirror, Beam, Polarizator, Teleporter, Item, Exit, Mine };

struct Tile {
    Kind kind = Kind::Empty;
    std::uint8_t orientation = 0;  // polarizator base orientation 0..7
    bool rotating = false;         // polarizator follows the phase
    char pair = 0;                 // teleporter pair id 'a'..'z' except 'o'
    std::uint32_t item = 0;        // item index, row-major

    friend bool operator==(const Tile&, const Tile&) = default;
};

struct Point {
    int x = 0;
    int y = 0;

    friend auto operator<=>(const Point&, const Point&) = default;
};

struct RayLevel {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    std::vector<Tile> tiles;  // row-major

    bool inside(Point p) const { return p.x >= 0 && p.y >= 0 && p.x < int(width) && p.y < int(height); }
    const Tile& at(Point p) const { return tiles[std::size_t(p.y) * width + std::size_t(p.x)]; }
    Tile& at(Point p) { return tiles[std::size_t(p.y) * width + std::size_t(p.x)]; }

    friend bool operator==(const RayLevel&, const RayLevel&) = default;
};

/// Blank level of the given size.
RayLevel make_level(std::uint32_t width, std::uint32_t height);

/// Throws Error(BadParams) unless there is exactly one beam and one exit,
/// teleporter ids come in pairs and item indices are 0..k-1 in row-major order.
void validate(const RayLevel& level);

/// The 16 lattice steps ordered by angle, y pointing down; k = 0 is east.
inline constexpr std::array<Point, 16> kDirections = {{{1, 0},
                                                       {2, 1},
                                                       {1, 1},
                                                       {1, 2},
                                                       {0, 1},
                                                       {-1, 2},
                                                       {-1, 1},
                                                       {-2, 1},
                                                       {-1, 0},
                                                       {-2, -1},
                                                       {-1, -1},
                                                       {-1, -2},
                                                       {0, -1},
                                                       {1, -2},
                                                       {1, -1},
                                                       {2, -1}}};

constexpr int opposite(int k) { return (k + 8) % 16; }

using Phase = std::uint8_t;

/// Orientation of the polarizator at a point chosen by the player, or
/// nullopt if not decided yet. Only consulted for static polarizators.
using PolarizatorChoice = std::function<std::optional<int>(Point)>;

struct TraceResult {
    enum class Kind : std::uint8_t {
        Terminates,  // at a mirror, beam or exit
        Absorbed,
        Periodic,
        Undecided,  // reached a static polarizator the choice left open
    };

    Kind kind = Kind::Absorbed;
    Point at;  // terminating element, absorbing cell or undecided polarizator
    std::vector<std::uint32_t> items;
    bool crossed_polarizator = false;
};

/// Throws Error(BadOrigin) unless `from` holds a beam or a mirror.
TraceResult trace_ray(const RayLevel& level, Point from, int k, Phase phase, const PolarizatorChoice& choice = {});

struct ElementGraph {
    std::vector<Point> nodes;  // beam, mirrors, items, exit in row-major order
    std::vector<std::set<std::uint32_t>> arcs;
    std::set<std::pair<std::uint32_t, std::uint32_t>> polarized;  // arcs whose trace crossed a polarizator
    std::uint32_t beam = 0;
    std::optional<std::uint32_t> exit;
    std::vector<std::uint32_t> items;  // node of item i

    std::optional<std::uint32_t> node_at(Point p) const;
};

ElementGraph build_reachability_graph(const RayLevel& level, Phase phase);

struct PlanStep {
    std::optional<std::uint32_t> item;  // nullopt for the final exit shot
    Phase phase = 0;
    std::vector<Point> chain;  // beam, mirrors in firing order, then the target
};

struct DeflektorResult {
    bool solvable = false;
    std::vector<PlanStep> plan;
};

/// Polarizators are fixed (static) or follow the phase (rotating).
DeflektorResult solve_deflektor(const RayLevel& level);

struct RayBounds {
    std::uint32_t max_mirrors = 5;
    std::uint32_t max_polarizators = 4;
    bool orientable_polarizators = false;  // static polarizators set by the player
};

/// Exact search over mirror aims, beam aims, phases and (if orientable)
/// polarizator orientations. Throws Error(TooLarge) beyond the bounds.
bool solve_ray_brute(const RayLevel& level, const RayBounds& bounds = {});

struct Configuration {
    int beam_aim = 0;
    Phase phase = 0;
    std::map<Point, int> mirrors;       // aim per mirror, default 0
    std::map<Point, int> polarizators;  // player orientation, default base
};

struct Shot {
    bool reached_exit = false;
    std::vector<std::uint32_t> items;
    std::vector<Point> chain;  // beam and every mirror the ray leaves from
};

Shot fire(const RayLevel& level, const Configuration& config);

struct MindbenderLevel {
    RayLevel level;
    std::vector<Point> origin;  // top-left corner of each vertex gadget
    std::map<std::pair<std::uint32_t, std::uint32_t>, bool> horizontal;  // per kept arc: R->L (true) or T->B
};

/// One gadget per vertex; arcs into s and out of t are dropped. Throws
/// Error(DegreeViolation) when an in- or out-degree exceeds two and
/// Error(TooLarge) when more than 25 arcs need teleporters.
MindbenderLevel reduce_mindbender(const DGraph& g, std::uint32_t s, std::uint32_t t);

/// Mirror aims and polarizator orientations that route the beam along a
/// simple s-t path of the source graph.
Configuration mindbender_configuration(const MindbenderLevel& m, const oracle::Path& path);

}  // namespace hardgame::ray
