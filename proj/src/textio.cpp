#include "bicone/textio.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bicone {

namespace {

std::string monomial_to_text(const Ring& ring, const Monomial& m) {
    std::string s;
    for (int v = 0; v < ring.nvars(); ++v) {
        unsigned e = m.exponent(v);
        if (!e) continue;
        if (!s.empty()) s += "*";
        s += ring.name(v);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::string abs_str(const mpq_class& q) {
    mpq_class a = q < 0 ? mpq_class(-q) : q;
    return a.get_str();
}

} // namespace

std::string poly_to_text(const Poly& f) {
    if (f.is_zero()) return "0";
    const Ring& ring = *f.ring();
    std::string s;
    bool first = true;
    for (auto& [m, c] : f.terms()) {
        bool negative = c < 0;
        if (first) {
            if (negative) s += "-";
            first = false;
        } else {
            s += negative ? " - " : " + ";
        }
        std::string mono = monomial_to_text(ring, m);
        std::string coeff = abs_str(c);
        if (mono.empty()) s += coeff;
        else if (coeff == "1") s += mono;
        else s += coeff + "*" + mono;
    }
    return s;
}

std::string ideal_to_text(const Ideal& ideal) {
    std::ostringstream out;
    out << "vars: ";
    for (int v = 0; v < ideal.ring->nvars(); ++v) {
        if (v) out << ",";
        out << ideal.ring->name(v);
    }
    out << "\n";
    std::vector<size_t> order(ideal.generators.size());
    std::iota(order.begin(), order.end(), size_t(0));
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return ideal.labels[a] < ideal.labels[b];
    });
    for (size_t i : order) out << poly_to_text(ideal.generators[i]) << "\n";
    return out.str();
}

std::string polys_to_text(const RingPtr& ring, const std::vector<Poly>& polys) {
    std::ostringstream out;
    out << "vars: ";
    for (int v = 0; v < ring->nvars(); ++v) {
        if (v) out << ",";
        out << ring->name(v);
    }
    out << "\n";
    for (auto& f : polys) out << poly_to_text(f) << "\n";
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::runtime_error("write failed for " + path);
}

nlohmann::json element_to_json(const liealg::Element& x) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& c : x.coords) arr.push_back(c.get_str());
    return arr;
}

nlohmann::json pair_to_json(const liealg::Element& x, const liealg::Element& y) {
    return nlohmann::json{{"x", element_to_json(x)}, {"y", element_to_json(y)}};
}

} // namespace bicone
