#pragma once

#include <string>

#include "sshk/action.hpp"
#include "sshk/engines.hpp"

namespace sshk {

/// One parsed input document; exactly one payload is set, matching kind.
struct InputDocument {
    std::string kind;  // automaton | graph | katsura | free_abelian | multispinal
    std::optional<SelfSimilarAction> automaton;
    std::optional<GraphInput> graph;
    std::optional<KatsuraInput> katsura;
    std::optional<FreeAbelianInput> free_abelian;
    std::optional<MultispinalInput> multispinal;
};

/// Parse a JSON document (see fixtures/ for the schema by example).
/// Malformed input raises InputError.
InputDocument parse_document(const std::string& text);
InputDocument load_document(const std::string& path);

/// Matrix exchange format: array of rows, integer entries; rationals may be
/// written as "p/q" strings.  Accepts either a bare array or {"matrix": ...}.
IntMatrix parse_int_matrix(const std::string& text);
RatMatrix parse_rat_matrix(const std::string& text);
std::string read_file(const std::string& path);

}  // namespace sshk
