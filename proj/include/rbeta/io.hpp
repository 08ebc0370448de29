#pragma once

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "record.hpp"

namespace rbeta {

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("ParseError", what) {}
};
struct IoError : Error {
    explicit IoError(const std::string& what) : Error("IoError", what) {}
};

namespace detail {

inline bool parse_real(const std::string& s, double& out) {
    if (s.empty()) return false;
    if (s == "inf" || s == "+inf") return out = std::numeric_limits<double>::infinity(), true;
    if (s == "-inf") return out = -std::numeric_limits<double>::infinity(), true;
    if (s == "pi" || s == "+pi") return out = pi, true;
    if (s == "-pi") return out = -pi, true;
    std::size_t used = 0;
    try {
        out = std::stod(s, &used);
    } catch (...) {
        return false;
    }
    return used == s.size();
}

}  // namespace detail

// "re", "im i", "re+im i", "re-im i"; bare "i", "-i" allowed.  No spaces.
inline Complex parse_complex(std::string s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw ParseError("empty number");
    if (t.back() != 'i' || t == "inf" || t == "+inf" || t == "-inf" || t == "pi" || t == "+pi" || t == "-pi") {
        double r;
        if (!detail::parse_real(t, r)) throw ParseError("not a number: " + s);
        return r;
    }
    t.pop_back();
    // split at the last sign that is not part of an exponent
    std::size_t cut = std::string::npos;
    for (std::size_t k = t.size(); k-- > 1;) {
        if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
            cut = k;
            break;
        }
    }
    std::string re = (cut == std::string::npos) ? "" : t.substr(0, cut);
    std::string im = (cut == std::string::npos) ? t : t.substr(cut);
    if (im.empty() || im == "+") im = "1";
    if (im == "-") im = "-1";
    double a = 0.0, b;
    if (!re.empty() && !detail::parse_real(re, a)) throw ParseError("not a number: " + s);
    if (!detail::parse_real(im, b)) throw ParseError("not a number: " + s);
    return {a, b};
}

inline std::vector<Complex> parse_complex_list(const std::string& s) {
    std::vector<Complex> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_complex(item));
    if (s.back() == ',') throw ParseError("trailing comma in list: " + s);
    return out;
}

inline std::string format_real(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string format_complex(Complex z) {
    if (z.imag() == 0.0) return format_real(z.real());
    std::string im = format_real(std::abs(z.imag()));
    return format_real(z.real()) + (z.imag() < 0 || std::signbit(z.imag()) ? "-" : "+") + im + "i";
}

inline nlohmann::json complex_json(Complex z) {
    auto num = [](double x) -> nlohmann::json {
        if (std::isfinite(x)) return x;
        return nullptr;
    };
    return {{"re", num(z.real())}, {"im", num(z.imag())}};
}

inline nlohmann::json record_json(const VerificationRecord& r) {
    nlohmann::json in = nlohmann::json::object();
    for (const auto& [k, v] : r.inputs) in[k] = complex_json(v);
    auto num = [](double x) -> nlohmann::json {
        if (std::isfinite(x)) return x;
        return nullptr;
    };
    return {{"identity_id", r.identity_id},
            {"inputs", in},
            {"lhs", complex_json(r.lhs)},
            {"rhs", complex_json(r.rhs)},
            {"abs_gap", num(r.abs_gap)},
            {"rel_gap", num(r.rel_gap)},
            {"tol", {{"abs", r.tol.abs}, {"rel", r.tol.rel}}},
            {"pass", r.pass},
            {"runtime_ms", r.runtime_ms},
            {"note", r.note}};
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string o = "\"";
    for (char c : s) o += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return o + "\"";
}

inline std::string records_csv(const std::vector<VerificationRecord>& rs) {
    std::string o = "identity_id,inputs,lhs_re,lhs_im,rhs_re,rhs_im,abs_gap,rel_gap,tol_abs,tol_rel,pass,runtime_ms,note\n";
    for (const auto& r : rs) {
        std::string in;
        for (const auto& [k, v] : r.inputs) in += (in.empty() ? "" : ";") + k + "=" + format_complex(v);
        o += csv_escape(r.identity_id) + "," + csv_escape(in) + "," + format_real(r.lhs.real()) + "," +
             format_real(r.lhs.imag()) + "," + format_real(r.rhs.real()) + "," + format_real(r.rhs.imag()) + "," +
             format_real(r.abs_gap) + "," + format_real(r.rel_gap) + "," + format_real(r.tol.abs) + "," +
             format_real(r.tol.rel) + "," + (r.pass ? "true" : "false") + "," + format_real(r.runtime_ms) + "," +
             csv_escape(r.note) + "\n";
    }
    return o;
}

// temp file + rename
inline void write_atomic(const std::string& path, const std::string& text) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw IoError("cannot open " + tmp.string() + " for writing");
        f << text;
        f.flush();
        if (!f) throw IoError("write to " + tmp.string() + " failed");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("cannot move report into " + path);
    }
}

}  // namespace rbeta
