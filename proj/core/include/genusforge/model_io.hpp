#ifndef GENUSFORGE_MODEL_IO_HPP
#define GENUSFORGE_MODEL_IO_HPP

#include <string>
#include <string_view>

#include "genusforge/lattice.hpp"
#include "genusforge/nodal.hpp"
#include "genusforge/planner.hpp"

namespace genusforge {

// Model files are JSON: { "generators": [names...], "gram": [[ints...]...],
// "effective_tests": [names...], "a_block": [9 names], "b_block": [9 names] }
// with the block keys optional (both or neither). Gram entries may be JSON
// integers or decimal strings. Parsing resolves names; axioms are the
// business of validate_model.
IntersectionModel parse_model_json(const std::string& text);

struct LoadedModel {
    IntersectionModel model;
    std::string content_hash;  // "fnv1a64:<16 hex digits>" over the raw bytes
};

LoadedModel load_model_file(const std::string& path);

std::string fnv1a64_hex(std::string_view bytes);

// Witness records carry every integer as a decimal string, the tool version
// and the content hash of the model they were computed against. Output is
// deterministic: fixed key order, two-space indent.
std::string genus_witness_record(const GenusWitness& w, const std::string& model_hash);
std::string nodal_witness_record(const NodalWitness& w, const std::string& model_hash);

struct ParsedGenusRecord {
    GenusWitness witness;
    std::string model_hash;
    std::string tool_version;
};
struct ParsedNodalRecord {
    NodalWitness witness;
    std::string model_hash;
    std::string tool_version;
};

ParsedGenusRecord parse_genus_witness_record(const std::string& json_text);
ParsedNodalRecord parse_nodal_witness_record(const std::string& json_text);

}  // namespace genusforge

#endif
