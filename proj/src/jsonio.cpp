#include "grasspack/jsonio.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "grasspack/detail/format.hpp"

namespace grasspack {

// ============================================================================
// JsonWriter
// ============================================================================

namespace {

void append_quoted(std::string& out, std::string_view s) {
    out += '"';
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x",
                                  static_cast<unsigned>(ch));
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    out += '"';
}

} // namespace

void JsonWriter::separate() {
    if (pending_key_) {
        pending_key_ = false;
        return;
    }
    if (!first_in_scope_.empty()) {
        if (first_in_scope_.back()) {
            first_in_scope_.back() = false;
        } else {
            out_ += ',';
        }
    }
}

JsonWriter& JsonWriter::begin_object() {
    separate();
    out_ += '{';
    first_in_scope_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    out_ += '}';
    first_in_scope_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    separate();
    out_ += '[';
    first_in_scope_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    out_ += ']';
    first_in_scope_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::key(std::string_view name) {
    separate();
    append_quoted(out_, name);
    out_ += ':';
    pending_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(double x) {
    if (!std::isfinite(x)) {
        throw Error("JsonWriter: non-finite number has no JSON encoding");
    }
    separate();
    out_ += detail::fmt17(x);
    return *this;
}

JsonWriter& JsonWriter::value(std::int64_t x) {
    separate();
    out_ += std::to_string(x);
    return *this;
}

JsonWriter& JsonWriter::value(bool b) {
    separate();
    out_ += b ? "true" : "false";
    return *this;
}

JsonWriter& JsonWriter::value(std::string_view s) {
    separate();
    append_quoted(out_, s);
    return *this;
}

JsonWriter& JsonWriter::null() {
    separate();
    out_ += "null";
    return *this;
}

// ============================================================================
// Shared parsing helpers
// ============================================================================

namespace {

using nlohmann::json;

json parse_text(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

const json& member(const json& obj, const char* name, const char* where) {
    if (!obj.is_object()) {
        throw ParseError(std::string(where) + " must be an object");
    }
    auto it = obj.find(name);
    if (it == obj.end()) {
        throw ParseError(std::string(where) + " is missing \"" + name + "\"");
    }
    return *it;
}

std::int64_t positive_int(const json& v, const std::string& where) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 1) {
        throw ParseError(where + " must be a positive integer");
    }
    return v.get<std::int64_t>();
}

Complex parse_entry(const json& e, const std::string& where) {
    if (e.is_number()) {
        return Complex(e.get<double>(), 0.0);
    }
    if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
        return Complex(e[0].get<double>(), e[1].get<double>());
    }
    throw ParseError(where + " must be a number or an [re, im] pair");
}

// Rows of [re, im] entries into a validated Matrix (finiteness checked by the
// Matrix constructor). Row lengths must all equal cols.
Matrix parse_matrix(const json& rows_json, std::size_t rows, std::size_t cols,
                    const std::string& where) {
    if (!rows_json.is_array() || rows_json.size() != rows) {
        throw ParseError(where + " must be an array of " + std::to_string(rows) +
                         " rows");
    }
    std::vector<Complex> entries;
    entries.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = rows_json[i];
        if (!row.is_array() || row.size() != cols) {
            throw ParseError(where + " row " + std::to_string(i) +
                             " must be an array of " + std::to_string(cols) +
                             " entries");
        }
        for (std::size_t j = 0; j < cols; ++j) {
            entries.push_back(parse_entry(
                row[j], where + " entry (" + std::to_string(i) + ", " +
                            std::to_string(j) + ")"));
        }
    }
    try {
        return Matrix(rows, cols, std::move(entries));
    } catch (const ValidationError& e) {
        throw ValidationError(where + ": " + e.what());
    }
}

void write_matrix(JsonWriter& w, const Matrix& m) {
    w.begin_array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        w.begin_array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            w.begin_array();
            w.value(m(i, j).real());
            w.value(m(i, j).imag());
            w.end_array();
        }
        w.end_array();
    }
    w.end_array();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path + " for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("failed while reading " + path);
    }
    return std::move(buf).str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + path + " for writing");
    }
    out << text << '\n';
    out.flush();
    if (!out.good()) {
        throw IoError("failed while writing " + path);
    }
}

} // namespace

// ============================================================================
// Packing files
// ============================================================================

std::string packing_to_json(const Packing& p) {
    JsonWriter w;
    w.begin_object();
    w.key("field").value(p.field() == FieldTag::Real ? "R" : "C");
    w.key("ambient_dim").value(static_cast<std::int64_t>(p.ambient_dim()));
    w.key("dim").value(static_cast<std::int64_t>(p.dim()));
    w.key("subspaces").begin_array();
    for (const Subspace& s : p.subspaces()) {
        w.begin_object();
        w.key("basis");
        write_matrix(w, s.basis());
        w.end_object();
    }
    w.end_array();
    w.end_object();
    return w.str();
}

Packing packing_from_json(std::string_view text, Tolerance tol) {
    const json j = parse_text(text);

    const json& field_json = member(j, "field", "packing");
    FieldTag field;
    if (field_json.is_string() && field_json.get<std::string>() == "R") {
        field = FieldTag::Real;
    } else if (field_json.is_string() && field_json.get<std::string>() == "C") {
        field = FieldTag::Complex;
    } else {
        throw ParseError("packing \"field\" must be \"R\" or \"C\"");
    }

    const auto k = static_cast<std::size_t>(
        positive_int(member(j, "ambient_dim", "packing"), "packing \"ambient_dim\""));
    const auto m = static_cast<std::size_t>(
        positive_int(member(j, "dim", "packing"), "packing \"dim\""));

    const json& subs = member(j, "subspaces", "packing");
    if (!subs.is_array() || subs.empty()) {
        throw ParseError("packing \"subspaces\" must be a non-empty array");
    }

    std::vector<Subspace> out;
    out.reserve(subs.size());
    for (std::size_t i = 0; i < subs.size(); ++i) {
        const std::string where = "subspace " + std::to_string(i);
        const Matrix basis =
            parse_matrix(member(subs[i], "basis", where.c_str()), k, m,
                         where + " basis");
        try {
            out.push_back(make_subspace(field, basis, tol));
        } catch (const ValidationError& e) {
            throw ValidationError(where + ": " + e.what());
        }
    }
    return make_packing(std::move(out));
}

void save_packing(const std::string& path, const Packing& p) {
    write_file(path, packing_to_json(p));
}

Packing load_packing(const std::string& path, Tolerance tol) {
    return packing_from_json(read_file(path), tol);
}

// ============================================================================
// Unitary-list files
// ============================================================================

std::string unitary_list_to_json(const UnitaryList& us) {
    JsonWriter w;
    w.begin_object();
    w.key("size").value(static_cast<std::int64_t>(us.size));
    w.key("matrices").begin_array();
    for (const Matrix& m : us.matrices) {
        write_matrix(w, m);
    }
    w.end_array();
    w.end_object();
    return w.str();
}

UnitaryList unitary_list_from_json(std::string_view text) {
    const json j = parse_text(text);
    UnitaryList us;
    us.size = static_cast<std::size_t>(
        positive_int(member(j, "size", "unitary list"), "unitary list \"size\""));

    const json& ms = member(j, "matrices", "unitary list");
    if (!ms.is_array()) {
        throw ParseError("unitary list \"matrices\" must be an array");
    }
    us.matrices.reserve(ms.size());
    for (std::size_t t = 0; t < ms.size(); ++t) {
        us.matrices.push_back(parse_matrix(ms[t], us.size, us.size,
                                           "matrix " + std::to_string(t)));
    }
    return us;
}

void save_unitary_list(const std::string& path, const UnitaryList& us) {
    write_file(path, unitary_list_to_json(us));
}

UnitaryList load_unitary_list(const std::string& path) {
    return unitary_list_from_json(read_file(path));
}

// ============================================================================
// Certification reports
// ============================================================================

namespace {

void write_scalar_verdict(JsonWriter& w, const Verdict<double>& v) {
    w.begin_object();
    w.key("holds").value(v.holds);
    w.key("vacuous").value(v.vacuous);
    w.key("value");
    if (v.value) {
        w.value(*v.value);
    } else {
        w.null();
    }
    w.end_object();
}

} // namespace

void write_report_fields(JsonWriter& w, const CertificationReport& r) {
    w.key("vacuous").value(r.vacuous);

    w.key("tight").value(r.tight_bound.has_value());
    w.key("tight_bound");
    if (r.tight_bound) {
        w.value(*r.tight_bound);
    } else {
        w.null();
    }

    w.key("equichordal");
    write_scalar_verdict(w, r.equichordal);

    w.key("strongly_simplicial");
    w.begin_object();
    w.key("holds").value(r.strongly_simplicial.holds);
    w.key("vacuous").value(r.strongly_simplicial.vacuous);
    w.key("value");
    if (r.strongly_simplicial.value) {
        w.begin_array();
        for (double e : *r.strongly_simplicial.value) w.value(e);
        w.end_array();
    } else {
        w.null();
    }
    w.end_object();

    w.key("equiisoclinic");
    write_scalar_verdict(w, r.equiisoclinic);

    w.key("min_chordal_sq");
    if (std::isfinite(r.min_chordal_sq)) {
        w.value(r.min_chordal_sq);
    } else {
        w.null();
    }

    w.key("simplex_bound");
    if (r.simplex_bound) {
        w.value(*r.simplex_bound);
    } else {
        w.null();
    }
    w.key("orthoplex_bound").value(r.orthoplex_bound);
    w.key("gerzon").value(r.gerzon);
    w.key("regime").value(regime_name(r.regime));
    w.key("simplex_saturated").value(r.simplex_saturated);
    w.key("orthoplex_saturated").value(r.orthoplex_saturated);
}

std::string report_to_json(const CertificationReport& r) {
    JsonWriter w;
    w.begin_object();
    write_report_fields(w, r);
    w.end_object();
    return w.str();
}

} // namespace grasspack
