#pragma once

#include "fsk/algebra.hpp"

#include <map>
#include <optional>
#include <tuple>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fsk {

// boundary segments 0..n-1 clockwise; segment s covers [s, s+1), the stop s sits at position s
using ArcLabel = std::pair<int, int>;  // segment labels, first <= second
ArcLabel arc_label(int a, int b);
std::string arc_string(const ArcLabel& a);

struct Endpoint {
    int segment = 0;
    Rational offset;  // in (0, 1)
};

struct Arc {
    ArcLabel label;
    Endpoint e0, e1;
};

using Positions = std::map<std::pair<ArcLabel, int>, Rational>;

// offsets: on each segment, arcs whose other end lies further clockwise come first
std::vector<Arc> place_arcs(int n, const std::vector<ArcLabel>& system);
Positions arc_positions(int n, const std::vector<ArcLabel>& system);
bool arcs_cross(const Positions& pos, const ArcLabel& a, const ArcLabel& b);

struct ArcPair {
    ArcLabel first, second;  // first < second

    std::string tag() const;
    bool operator==(const ArcPair& o) const { return first == o.first && second == o.second; }
    bool operator!=(const ArcPair& o) const { return !(*this == o); }
    bool operator<(const ArcPair& o) const { return std::tie(first, second) < std::tie(o.first, o.second); }
};

ArcPair arc_pair(const ArcLabel& a, const ArcLabel& b);

struct ArcCollection {
    int n = 3;
    std::vector<ArcPair> pairs;
    std::string provenance = "intermediate";

    std::vector<ArcLabel> arcs() const;  // distinct arcs, sorted
};

struct NoTriangle : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct GenerationFailure : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct StepInvalid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// arc of span I, for I = 1..n-1
std::vector<ArcLabel> acampo_arc_labels(int n);
ArcCollection acampo_arcs(int n);
ArcCollection iyama_arcs(int n);
// gamma_tilde / gamma vertex of each pair, in collection order
std::vector<int> acampo_vertex_map(int n);
std::vector<int> iyama_vertex_map(int n);

bool auroux_generation_check(int n, const std::vector<ArcLabel>& system);
bool auroux_generation_check(const ArcCollection& c);

struct ReebChord {
    int segment = 0;
    ArcLabel from, to;
    Rational from_pos, to_pos;
};

std::vector<ReebChord> reeb_chords(int n, const std::vector<ArcLabel>& system, const ArcLabel& a, const ArcLabel& b);

// strand calculus: each generator sends the arcs of one pair to the arcs of another
struct Strand {
    ArcLabel from, to;
    int segment = -1;  // -1 for an identity strand

    bool operator<(const Strand& o) const { return std::tie(from, to, segment) < std::tie(o.from, o.to, o.segment); }
    bool operator==(const Strand& o) const { return from == o.from && to == o.to && segment == o.segment; }
};
using Generator = std::vector<Strand>;

std::vector<Generator> hom_generators(const Positions& pos, const ArcPair& x, const ArcPair& y);
std::optional<Generator> compose_generators(const Positions& pos, const Generator& first, const Generator& second);

FDAlgebra endo_quiver(const ArcCollection& c);

// dims of Hom(x, y) and Hom(y, x) computed on the four arcs alone
std::pair<int, int> local_hom(int n, const ArcPair& x, const ArcPair& y);
// no morphism in either direction, for every matching of the arcs
bool orthogonal(int n, const ArcPair& x, const ArcPair& y);

ArcCollection rotate_labels(const ArcCollection& c, int k);
ArcPair rotate_pair(int n, const ArcPair& p, int k);

ArcPair triangle_cone(const ArcPair& x, const ArcPair& y);
// ij x jk -> ij x ik for i, j, k in clockwise order
ArcPair iso_auroux(int n, const ArcPair& x);

struct MutationStep {
    std::string kind;  // cone_forward | cone_backward | transpose_disjoint | rotate_labels | iso_auroux
    std::vector<int> indices;
    std::string triangle;
    int shift_delta = 0;
};

struct CombingTrace {
    int n = 3;
    ArcCollection start, end;
    std::vector<MutationStep> steps;
    std::vector<int> shifts;  // per object of end, before the global normalization
};

CombingTrace comb(int n);
// throws StepInvalid when the step does not apply
void apply_step(int n, std::vector<ArcPair>& cur, const MutationStep& st);
std::vector<ArcCollection> trace_states(const CombingTrace& t);
VerifyReport replay_trace(const CombingTrace& t);
bool lex_ordered(const ArcCollection& c);
bool verify_lex_order(const CombingTrace& t);

}  // namespace fsk
