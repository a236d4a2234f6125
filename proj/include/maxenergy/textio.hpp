#pragma once

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace maxenergy {

/// "%.{sig}g" rendering, sig in [1, 17]. 12 significant digits is the
/// machine precision used in reports, JSON and CSV; 6 is the human one.
std::string fmt_sig(double x, int sig);

/// Nearest double to the fmt_sig rendering of x.
double round_sig(double x, int sig);

inline const char* bool_str(bool b) { return b ? "true" : "false"; }

/// Minimal JSON emitter for the flat report objects this toolkit produces.
class JsonWriter {
public:
    JsonWriter& begin() { out_ << '{'; first_ = true; return *this; }
    JsonWriter& end() { out_ << '}'; return *this; }

    JsonWriter& field(const std::string& key, double v, int sig = 12);
    JsonWriter& field(const std::string& key, bool v);
    JsonWriter& field(const std::string& key, std::uint64_t v);
    JsonWriter& field(const std::string& key, const std::string& v);
    JsonWriter& field(const std::string& key, const char* v);
    JsonWriter& field_numbers(const std::string& key, const std::vector<double>& v,
                              int sig = 12);
    JsonWriter& field_indices(const std::string& key, const std::vector<std::size_t>& v);
    /// Inserts a pre-serialized JSON value verbatim.
    JsonWriter& field_raw(const std::string& key, const std::string& json);
    JsonWriter& field_null(const std::string& key);

    std::string str() const { return out_.str(); }

    static std::string escape(const std::string& s);

private:
    void sep(const std::string& key);

    std::ostringstream out_;
    bool first_ = true;
};

}  // namespace maxenergy
