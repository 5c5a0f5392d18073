// Local diagram moves (kink, poke, triangle slide, vertex twist, vertex
// slide) with insert/delete variants, the crossing change, seeded random
// walks over the isotopy moves, and replay of logged walks.
#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "sgi/diagram.hpp"

namespace sgi {

enum class MoveKind {
    R1Insert,
    R1Delete,
    R2Insert,
    R2Delete,
    R3,
    TwistInsert,
    TwistDelete,
    SlideInsert,
    SlideDelete,
    CrossingChange,
};

struct Move {
    MoveKind kind;
    std::vector<std::string> args;
};

const char* kind_name(MoveKind k);
std::string move_to_string(const Move& m);
Move parse_move(const std::string& line);

// Applies one move; DomainError when the move does not apply to `d`.
// Argument shapes:
//   r1-insert <edge> <slot> <sign> <over-first|under-first>
//   r1-delete <id>
//   r2-insert <edgeA> <slotA> <edgeB> <slotB> <a-over|b-over> <sign>
//   r2-delete <id1> <id2>
//   r3 <id1> <id2> <id3>
//   vtwist-insert <vertex> <sign>
//   vtwist-delete <vertex>
//   vslide-insert <edge> <vertex> <slot> <sign> <over|under>
//   vslide-delete <edge> <vertex>
//   crossing-change <id>
// Slots count the gaps along an edge's strand, 0 through side-count.
void apply_move(Diagram& d, const Move& m);

struct WalkResult {
    int applied = 0;
    int skipped = 0;
    std::vector<Move> log;  // applied moves only, in order
};

// Seeded walk over the nine isotopy moves (never the crossing change):
// each step draws a move kind uniformly, then a parameter tuple uniformly
// among the applicable ones, skipping the step when none apply.  The
// optional observer runs after every applied move; returning false aborts.
WalkResult random_walk(Diagram& d, int steps, unsigned long long seed,
                       const std::function<bool(const Diagram&, const Move&)>& observer = {});

// Re-applies a logged move sequence in order.
void replay(Diagram& d, const std::vector<Move>& log,
            const std::function<bool(const Diagram&, const Move&)>& observer = {});

// Unbiased integer draws from a seeded 64-bit engine (rejection sampling).
class WalkRng {
  public:
    explicit WalkRng(unsigned long long seed) : eng_(seed) {}
    unsigned long long uniform(unsigned long long n);

  private:
    std::mt19937_64 eng_;
};

}  // namespace sgi
