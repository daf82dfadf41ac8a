#ifndef SUMRANK_SERIALIZE_HPP
#define SUMRANK_SERIALIZE_HPP

#include <string>

#include "sumrank/pmds.hpp"

namespace sumrank {

// JSON wire formats. Elements are coefficient arrays over F_p, ascending
// powers, always of full ambient length; keys are emitted in sorted order so
// serialization is byte-stable across runs.

std::string to_json(const FieldContext& ctx);
std::shared_ptr<const FieldContext> field_from_json(const std::string& text);

std::string to_json(const Matrix& m);
Matrix matrix_from_json(const FieldContext& ctx, const std::string& text);

std::string to_json(const SeedCode& seed);
SeedCode seed_from_json(const FieldContext& ctx, const std::string& text);

std::string to_json(const MsrdCode& code);
MsrdCode msrd_from_json(const std::string& text);

std::string to_json(const PmdsCode& code);
PmdsCode pmds_from_json(const std::string& text);

/// True when the file holds a PMDS object (has a "global_gen" key).
bool json_is_pmds(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace sumrank

#endif
