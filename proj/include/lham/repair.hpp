#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lham/construction.hpp"
#include "lham/expansion.hpp"
#include "lham/graph.hpp"

namespace lham {

/// A base-graph path (q_1, ..., q_l): q_1 outside S', every later vertex inside.
using FeederPath = std::vector<Vertex>;

/// Everything repair decides before writing paths.
struct RepairPlan {
  VertexSet s_prime;                     // base vertices whose blocks S touches
  std::vector<FeederPath> feeders;       // one per vertex of S', ending there
  std::map<Vertex, Vertex> n_of;         // chosen out-neighbour of every base vertex
  std::vector<Edge> added_edges;         // in insertion order
  std::map<Vertex, std::vector<Arc>> t_in;   // v in S': feeder arcs into v, sorted
  std::map<Vertex, std::vector<Arc>> t_out;  // v in S': feeder arcs out of v (not first arcs), sorted
};

/// Vertex sequences through one block; keyed by arc.
struct BlockPaths {
  Vertex v = 0;
  std::map<Arc, std::vector<Vertex>> in_paths;   // in-arcs of v
  std::map<Arc, std::vector<Vertex>> out_paths;  // out-arcs of v
};

/// Pairwise edge-disjoint simple feeders, one ending at each vertex of S'.
/// Computed as a unit-capacity max-flow from the complement of S' into S'
/// (augmenting in vertex-id order), then decomposed into simple paths.
/// Throws InputError if |S'| > n/2, InvariantViolation if no full flow exists.
std::vector<FeederPath> find_feeder_paths(const BaseGraph& base, const VertexSet& s_prime);

/// Throws InvariantViolation naming the first broken feeder invariant.
void validate_feeder_paths(const BaseGraph& base, const VertexSet& s_prime, const std::vector<FeederPath>& feeders);

/// Paths through S_v^half for v in S'. g pairs sorted t_in with sorted
/// t_out + {(v, n_of_v)}. Throws InputError unless |t_in| - 1 = |t_out| and
/// (v, n_of_v) is an out-arc outside t_out.
BlockPaths inner_block_paths(const Codec& codec, const DiGraph& arcs, Vertex v, const std::vector<Arc>& t_in,
                             const std::vector<Arc>& t_out, Vertex n_of_v);

/// Paths through S_v^half for v outside S', using the added edges at v.
BlockPaths outer_block_paths(const Codec& codec, const DiGraph& arcs, Vertex v,
                             const std::vector<FeederPath>& feeders, Vertex n_of_v);

/// Throws InvariantViolation unless the paths are vertex-disjoint and cover
/// S_v^half exactly.
void validate_block_paths(const Codec& codec, const DiGraph& arcs, const BlockPaths& paths);

struct RepairResult {
  Graph h;
  CycleCertificate cycle;
  RepairPlan plan;
};

/// Builds a Hamiltonian H from G_E that agrees with G_E on every block touched
/// by S. Requires 0 < |S| <= delta |V(G_E)|; throws InputError otherwise.
/// Every postcondition is checked; a failure throws InvariantViolation.
RepairResult repair(const Construction& ge, const VerifiedExpander& base, const VertexSet& s);

/// True iff H has the order of G_E, `cycle` is Hamiltonian in H, N[S] is the
/// same in both, and the identity is an isomorphism G_E[N[S]] -> H[N[S]].
bool local_ham_certificate(const Graph& ge, const Graph& h, const VertexSet& s, const CycleCertificate& cycle);

nlohmann::json repair_plan_to_json(const RepairPlan& plan, const Codec& codec);

struct FamilyMember {
  std::string base_spec;
  BaseGraph base;
  ExpansionReport expansion;
  Construction construction;
};

struct FamilySkip {
  std::string base_spec;
  std::string reason;
};

struct FamilyResult {
  std::vector<FamilyMember> members;
  std::vector<FamilySkip> skipped;
};

/// complete:<k> gives K_k, K_{k+1}, ...; random_regular:d:n:seed gives orders
/// n, n+1, ... (odd d*n skipped) with the same seed. Bases failing h >= 1 or the
/// exhaustive-expansion cap are skipped with a reason. Orders strictly increase.
FamilyResult family(const std::string& spec, int count);

}  // namespace lham
