#include "biquat/convention.hpp"

#include <sstream>
#include <stdexcept>

namespace biquat {

Biquaternion reverse(const Biquaternion& a, ReversionKind kind) {
    switch (kind) {
        case ReversionKind::transpose:
            return {a.w, a.x, -a.y, a.z};
        case ReversionKind::dagger:
            return dagger(a);
        case ReversionKind::bar:
            return bar(a);
        case ReversionKind::bar_transpose:
            return {a.w, -a.x, a.y, -a.z};
    }
    throw std::invalid_argument("reverse: unknown reversion kind");
}

std::string to_string(ReversionKind kind) {
    switch (kind) {
        case ReversionKind::transpose: return "transpose";
        case ReversionKind::dagger: return "dagger";
        case ReversionKind::bar: return "bar";
        case ReversionKind::bar_transpose: return "bar-transpose";
    }
    return "?";
}

ReversionKind reversion_from_string(const std::string& name) {
    if (name == "transpose") return ReversionKind::transpose;
    if (name == "dagger") return ReversionKind::dagger;
    if (name == "bar") return ReversionKind::bar;
    if (name == "bar-transpose" || name == "bar_transpose") return ReversionKind::bar_transpose;
    throw std::invalid_argument("unknown reversion convention: " + name);
}

std::string to_string(const ConventionAssignment& c) {
    std::ostringstream os;
    os << to_string(c.reversion) << (c.grad_scalar_sign > 0 ? "/g+" : "/g-")
       << (c.phase_sign > 0 ? "p+" : "p-") << (c.rep_sign > 0 ? "r+" : "r-");
    return os.str();
}

ConventionAssignment convention_from_string(const std::string& name) {
    // Accept a bare reversion name ("transpose") or the full form
    // "transpose/g+p+r+" produced by to_string.
    ConventionAssignment c;
    auto slash = name.find('/');
    c.reversion = reversion_from_string(name.substr(0, slash));
    if (slash == std::string::npos) return c;
    std::string flags = name.substr(slash + 1);
    if (flags.size() != 6 || flags[0] != 'g' || flags[2] != 'p' || flags[4] != 'r')
        throw std::invalid_argument("malformed convention string: " + name);
    auto sign = [&](char ch) {
        if (ch == '+') return +1;
        if (ch == '-') return -1;
        throw std::invalid_argument("malformed convention string: " + name);
    };
    c.grad_scalar_sign = sign(flags[1]);
    c.phase_sign = sign(flags[3]);
    c.rep_sign = sign(flags[5]);
    return c;
}

std::vector<ConventionAssignment> all_conventions() {
    std::vector<ConventionAssignment> out;
    out.reserve(32);
    for (ReversionKind kind : {ReversionKind::transpose, ReversionKind::dagger,
                               ReversionKind::bar, ReversionKind::bar_transpose})
        for (int g : {+1, -1})
            for (int p : {+1, -1})
                for (int r : {+1, -1}) out.push_back({kind, g, p, r});
    return out;
}

}  // namespace biquat
