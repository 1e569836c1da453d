// Finite hybrid data models and the satisfaction relation.
//
// Node sets are 64-bit masks, so a model has at most 64 nodes. Relations
// are stored row-wise (successor mask per node) and every comparison is a
// partition given by a class id per node.

#ifndef HXPROOF_MODEL_HPP_
#define HXPROOF_MODEL_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "hxproof/sequent.hpp"
#include "hxproof/syntax.hpp"

namespace hxp {

using Mask = std::uint64_t;
constexpr std::size_t kMaxModelNodes = 64;

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct HybridDataModel {
  std::vector<std::string> names;                   // node ids, index = node
  std::map<std::string, std::vector<Mask>> rel;     // modality -> successor rows
  std::map<std::string, std::vector<int>> cmp;      // comparison -> class id per node
  std::map<std::string, int> g;                     // nominal -> node
  std::map<std::string, Mask> val;                  // prop -> nodes

  std::size_t size() const { return names.size(); }
  Mask all() const { return size() == 64 ? ~Mask{0} : (Mask{1} << size()) - 1; }
  int node_index(const std::string& id) const;      // throws ModelError

  void add_edge(const std::string& a, int from, int to);
  // Merges the classes of x and y under comparison c.
  void relate(const std::string& c, int x, int y);
  // Class id of n under c; comparisons absent from the model are identity.
  int cls(const std::string& c, int n) const;

  // Assigns every nominal in `nominals` lacking a value to `default_node`
  // and returns those names. With `strict`, throws instead.
  std::vector<std::string> complete_assignment(const std::set<std::string>& nominals,
                                               int default_node = 0, bool strict = false);

  // Re-checks representation invariants (non-empty, row widths, class
  // ids in range, g in range); throws ModelError.
  void validate() const;
};

HybridDataModel make_model(std::size_t nodes);

// Relation of α as successor rows.
std::vector<Mask> path_relation(const HybridDataModel& m, const Path& a);
// Nodes satisfying φ.
Mask extension(const HybridDataModel& m, const Node& e);

bool eval_path(const HybridDataModel& m, int n, int n2, const Path& a);
bool eval_node(const HybridDataModel& m, int n, const Node& e);
// [α ▲_c β] by its universal clause, without going through the expansion.
bool eval_box_compare(const HybridDataModel& m, int n, const Path& a, const Path& b,
                      CmpKind kind, const std::string& c);
bool satisfies_set(const HybridDataModel& m, int n, const std::vector<Node>& set);
bool check_sequent_validity(const HybridDataModel& m, const Sequent& s);

struct DataGraph {
  struct Vertex {
    std::string id;
    std::vector<std::string> labels;
    std::map<std::string, std::string> attrs;
    std::vector<std::string> index;
  };
  struct Edge {
    std::string from, to, label;
  };
  std::vector<Vertex> nodes;
  std::vector<Edge> edges;
};

// Labels become propositions, indexes nominals, attributes comparisons
// (equal values are related, then closed to an equivalence).
HybridDataModel ingest_datagraph(const DataGraph& dg);

// The people/birth-date graph used throughout the documentation.
DataGraph example_datagraph();

struct CountermodelOptions {
  // Skip models with a node unreachable from every named node; such a
  // model agrees with its generated submodel on all sequents.
  bool generated_only = true;
};

// Smallest refuting model with at most `max_nodes` nodes over the
// sequent's own symbols, or nullopt.
std::optional<HybridDataModel> find_countermodel(const Sequent& s, std::size_t max_nodes,
                                                 CountermodelOptions opt = {});

// Uniformly random model over `sig` with `nodes` nodes.
HybridDataModel random_model(const Signature& sig, std::size_t nodes, std::mt19937_64& rng);

}  // namespace hxp

#endif  // HXPROOF_MODEL_HPP_
