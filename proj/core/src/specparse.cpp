#include "srdef/specparse.hpp"

#include <cctype>

#include "srdef/assoc.hpp"
#include "srdef/json_io.hpp"
#include "srdef/spheres.hpp"

namespace srdef {

namespace {

int parse_int(const std::string& s, const std::string& what) {
    if (s.empty()) throw BadSpecifier(what + ": missing number");
    std::size_t pos = 0;
    int v;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw BadSpecifier(what + ": bad number '" + s + "'");
    }
    if (pos != s.size()) throw BadSpecifier(what + ": bad number '" + s + "'");
    return v;
}

/// split "a,b" at the top-level comma (parentheses may nest)
std::pair<std::string, std::string> split_pair(const std::string& s) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (s[i] == ',' && depth == 0) return {s.substr(0, i), s.substr(i + 1)};
    }
    throw BadSpecifier("join needs two comma-separated specs");
}

}  // namespace

SimplicialComplex parse_complex_spec(const std::string& spec) {
    if (spec.rfind("assoc:", 0) == 0) return assoc_build(parse_int(spec.substr(6), "assoc")).complex;
    if (spec.rfind("assoc", 0) == 0 && spec.size() > 5 && std::isdigit(spec[5]))
        return assoc_build(parse_int(spec.substr(5), "assoc")).complex;
    if (spec.rfind("deltahedron:T", 0) == 0)
        return deltahedron(parse_int(spec.substr(13), "deltahedron"));
    if (spec.rfind("deltahedron:", 0) == 0)
        return deltahedron(parse_int(spec.substr(12), "deltahedron"));
    if (spec.rfind("simplex:", 0) == 0)
        return SimplicialComplex::simplex(parse_int(spec.substr(8), "simplex"), "s");
    if (spec.rfind("cn:", 0) == 0) {
        auto seq = c_n_series(parse_int(spec.substr(3), "cn"));
        return seq.back();
    }
    if (spec.rfind("join:(", 0) == 0 && spec.back() == ')') {
        auto [a, b] = split_pair(spec.substr(6, spec.size() - 7));
        return join(parse_complex_spec(a), parse_complex_spec(b));
    }
    if (spec.rfind("file:", 0) == 0) return load_complex(spec.substr(5));
    throw BadSpecifier("unrecognized complex spec '" + spec + "'");
}

}  // namespace srdef
