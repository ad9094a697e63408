#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "grasspack/analysis.hpp"
#include "grasspack/construct.hpp"
#include "grasspack/model.hpp"

namespace grasspack {

// ============================================================================
// Minimal streaming JSON writer.
//
// Exists so that emitted numbers are under our control: every double is
// printed with 17 significant digits ("%.17g"), which round-trips exactly
// through a correct parser, making serialize-parse-serialize a byte-level
// fixed point. Commas and nesting are tracked internally.
// ============================================================================
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    /// Key inside an object; must be followed by exactly one value.
    JsonWriter& key(std::string_view name);
    JsonWriter& value(double x);
    JsonWriter& value(std::int64_t x);
    JsonWriter& value(bool b);
    JsonWriter& value(std::string_view s);
    // without this overload a string literal would convert to bool, not
    // string_view
    JsonWriter& value(const char* s) { return value(std::string_view(s)); }
    JsonWriter& null();

    const std::string& str() const { return out_; }

private:
    void separate();
    std::string out_;
    std::vector<bool> first_in_scope_;
    bool pending_key_ = false;
};

// ============================================================================
// Packing files
//
// Schema: {"field": "R"|"C", "ambient_dim": k, "dim": m,
//          "subspaces": [{"basis": [[[re, im], ...m entries], ...k rows]}, ...]}
// Entries are written as [re, im] pairs; on read a plain number x is accepted
// as shorthand for [x, 0].
// ============================================================================

std::string packing_to_json(const Packing& p);
Packing packing_from_json(std::string_view text, Tolerance tol = {});

/// Writes the JSON text plus a trailing newline. Throws IoError on failure.
void save_packing(const std::string& path, const Packing& p);
/// Throws IoError when the file cannot be read, ParseError/ValidationError
/// (naming the offending subspace or entry) when the content is bad.
Packing load_packing(const std::string& path, Tolerance tol = {});

// ============================================================================
// Unitary-list files
//
// Schema: {"size": r, "matrices": [[[entry, ...r], ...r rows], ...]} with the
// same entry encoding as packing files.
// ============================================================================

std::string unitary_list_to_json(const UnitaryList& us);
UnitaryList unitary_list_from_json(std::string_view text);

void save_unitary_list(const std::string& path, const UnitaryList& us);
UnitaryList load_unitary_list(const std::string& path);

// ============================================================================
// Certification reports
// ============================================================================

/// Writes the report's key/value fields into an object the caller has opened,
/// so extra fields can be appended before closing.
void write_report_fields(JsonWriter& w, const CertificationReport& r);

/// Complete report object. Absent values (vacuous packing, non-tight, ...)
/// appear as null.
std::string report_to_json(const CertificationReport& r);

} // namespace grasspack
