// JSON encodings of expressions, sequents, derivations and models.
//
// AST:        {"tag": "prop"|"nominal"|"bot"|"implies"|"at"|"diamond"|"compare",
//              "name"?, "kind"?: "eq"|"neq", "children": [...]}
//             paths use "atom"|"jump"|"test"|"concat".
// Sequent:    {"ante": [text], "succ": [text]}
// Derivation: {"rule", "macro"?, "principal": [text], "inst": {key: symbol},
//              "conclusion": Sequent, "children": [Derivation]}
//             with an optional root "declare": {"props": [...], "nominals": [...]}
//             for symbols whose spelling would be classified otherwise.
// Model:      {"nodes": [id], "rels": {a: [[n, m]]}, "cmp": {c: [[n, ...]]},
//              "g": {i: n}, "val": {p: [n]}}
// Data graph: {"nodes": [{"id", "labels", "attrs", "index"}],
//              "edges": [{"from", "to", "label"}]}
//
// Formulas inside derivations and sequents are ASCII surface syntax.
// Object keys are emitted sorted, so equal inputs give identical bytes.

#ifndef HXPROOF_JSON_IO_HPP_
#define HXPROOF_JSON_IO_HPP_

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "hxproof/kernel.hpp"
#include "hxproof/model.hpp"
#include "hxproof/symbols.hpp"

namespace hxp {

using json = nlohmann::json;

class JsonFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json node_to_json(const Node& e);
json path_to_json(const Path& a);
Node node_from_json(const json& j);
Path path_from_json(const json& j);

json sequent_to_json(const Sequent& s);
Sequent sequent_from_json(const json& j, SymbolTable& table);
Sequent sequent_from_json(const json& j);

json derivation_to_json(const Derivation& d);
Derivation derivation_from_json(const json& j);

json model_to_json(const HybridDataModel& m);
HybridDataModel model_from_json(const json& j);
json datagraph_to_json(const DataGraph& dg);
DataGraph datagraph_from_json(const json& j);
// Either format; a data graph is recognised by its "edges" member.
HybridDataModel load_model_json(const json& j);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace hxp

#endif  // HXPROOF_JSON_IO_HPP_
