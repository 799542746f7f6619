#ifndef BICONE_TEXTIO_HPP
#define BICONE_TEXTIO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "bicone/liealg.hpp"
#include "bicone/poly.hpp"

namespace bicone {

// Plain-text polynomial: terms in descending degrevlex, '*' for products,
// '^' for powers, exact integer/rational coefficients.
std::string poly_to_text(const Poly& f);

// One polynomial per line after a "vars: v1,v2,..." header; generators
// ordered by label so re-export is byte-identical.
std::string ideal_to_text(const Ideal& ideal);

// Same format for a plain list of polynomials, kept in the given order.
std::string polys_to_text(const RingPtr& ring, const std::vector<Poly>& polys);

void write_text_file(const std::string& path, const std::string& content);

nlohmann::json element_to_json(const liealg::Element& x);
nlohmann::json pair_to_json(const liealg::Element& x, const liealg::Element& y);

} // namespace bicone

#endif
