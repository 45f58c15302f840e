#include "walg/config.hpp"

#include <stdexcept>

namespace walg {

Config make_config(int n, int l, int epsilon) {
    if (n < 1 || l < 1) throw std::invalid_argument("make_config: n, l must be >= 1");
    if (epsilon != 1 && epsilon != -1)
        throw std::invalid_argument("make_config: epsilon must be +1 or -1");
    Config c;
    c.n = n;
    c.l = l;
    c.epsilon = epsilon;
    c.phi = (l % 2 == 1) ? epsilon : -epsilon;
    if (n % 2 == 1 && c.phi != 1)
        throw std::invalid_argument(
            "make_config: no valid phi (n odd forces phi = +, but l " +
            std::string(l % 2 == 1 ? "odd" : "even") + " with epsilon = " + sign_string(epsilon) +
            " forces phi = -)");
    return c;
}

std::vector<int> index_set(int n) {
    std::vector<int> out;
    out.reserve(n);
    for (int v = -n + 1; v <= n - 1; v += 2) out.push_back(v);
    return out;
}

bool in_index_set(int v, int n) {
    return v >= -n + 1 && v <= n - 1 && ((v + n - 1) % 2 == 0);
}

int index_pos(int v, int n) { return (v + n - 1) / 2; }

std::string sign_string(int s) { return s >= 0 ? "+" : "-"; }

int parse_sign(const std::string& s) {
    if (s == "+" || s == "+1" || s == "1") return 1;
    if (s == "-" || s == "-1") return -1;
    throw std::invalid_argument("parse_sign: expected '+' or '-', got '" + s + "'");
}

}  // namespace walg
