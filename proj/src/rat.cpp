#include "conley/rat.hpp"

#include <cctype>

namespace conley {

Rat parse_rat(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace((unsigned char)ch)) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        long long n = std::stoll(s.substr(0, slash));
        long long d = std::stoll(s.substr(slash + 1));
        return Rat(n, d);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        bool neg = s[0] == '-';
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip == "-" || ip.empty()) ip += "0";
        long long den = 1;
        for (size_t i = 0; i < fp.size(); ++i) {
            if (den > INT64_MAX / 10) throw std::overflow_error("decimal too long");
            den *= 10;
        }
        long long whole = std::stoll(ip);
        long long frac = fp.empty() ? 0 : std::stoll(fp);
        Rat r = Rat(whole) + (neg ? -Rat(frac, den) : Rat(frac, den));
        return r;
    }
    return Rat(std::stoll(s));
}

}  // namespace conley
