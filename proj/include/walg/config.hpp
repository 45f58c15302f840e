// Configuration (n, l, epsilon) with the derived sign phi, and the symmetric
// index sets I_n = {-n+1, -n+3, ..., n-1} used to label rows, columns and
// matrix coordinates throughout.
#pragma once

#include <string>
#include <vector>

namespace walg {

// hat(i) = 0 for i >= 0, 1 for i < 0 (exponent bit for epsilon/phi powers).
constexpr int hat(int i) { return i < 0 ? 1 : 0; }
// tilde(i) = hat(-i) = 0 for i <= 0, 1 for i > 0.
constexpr int tilde(int i) { return i > 0 ? 1 : 0; }

struct Config {
    int n = 1;
    int l = 1;
    int epsilon = 1;  // +1 or -1
    int phi = 1;      // derived from (n, l, epsilon)

    int N() const { return n * l; }

    bool operator==(const Config& o) const {
        return n == o.n && l == o.l && epsilon == o.epsilon && phi == o.phi;
    }
};

// Derives phi: phi = epsilon for odd l, -epsilon for even l, and phi must be +
// when n is odd. Throws std::invalid_argument when the constraints conflict
// (n odd, l even, epsilon = +) or when n, l < 1 / epsilon not a sign.
Config make_config(int n, int l, int epsilon);

// {-n+1, -n+3, ..., n-1} in increasing order.
std::vector<int> index_set(int n);

bool in_index_set(int v, int n);

// Position of v within index_set(n), i.e. (v + n - 1) / 2.
int index_pos(int v, int n);

std::string sign_string(int s);
int parse_sign(const std::string& s);

}  // namespace walg
