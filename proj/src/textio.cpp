#include "maxenergy/textio.hpp"

#include <cstdio>
#include <cstdlib>

namespace maxenergy {

std::string fmt_sig(double x, int sig) {
    if (sig < 1) sig = 1;
    if (sig > 17) sig = 17;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", sig, x);
    return buf;
}

double round_sig(double x, int sig) {
    return std::strtod(fmt_sig(x, sig).c_str(), nullptr);
}

void JsonWriter::sep(const std::string& key) {
    if (!first_) out_ << ',';
    first_ = false;
    out_ << '"' << escape(key) << "\":";
}

JsonWriter& JsonWriter::field(const std::string& key, double v, int sig) {
    sep(key);
    out_ << fmt_sig(v, sig);
    return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, bool v) {
    sep(key);
    out_ << bool_str(v);
    return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, std::uint64_t v) {
    sep(key);
    out_ << v;
    return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, const std::string& v) {
    sep(key);
    out_ << '"' << escape(v) << '"';
    return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, const char* v) {
    return field(key, std::string(v));
}

JsonWriter& JsonWriter::field_numbers(const std::string& key,
                                      const std::vector<double>& v, int sig) {
    sep(key);
    out_ << '[';
    for (std::size_t i = 0; i < v.size(); ++i)
        out_ << (i ? "," : "") << fmt_sig(v[i], sig);
    out_ << ']';
    return *this;
}

JsonWriter& JsonWriter::field_indices(const std::string& key,
                                      const std::vector<std::size_t>& v) {
    sep(key);
    out_ << '[';
    for (std::size_t i = 0; i < v.size(); ++i) out_ << (i ? "," : "") << v[i];
    out_ << ']';
    return *this;
}

JsonWriter& JsonWriter::field_raw(const std::string& key, const std::string& json) {
    sep(key);
    out_ << json;
    return *this;
}

JsonWriter& JsonWriter::field_null(const std::string& key) {
    sep(key);
    out_ << "null";
    return *this;
}

std::string JsonWriter::escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

}  // namespace maxenergy
