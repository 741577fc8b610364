#ifndef DKBV_FIXTURES_HPP
#define DKBV_FIXTURES_HPP

#include "dkbv/encoding.hpp"

namespace dkbv {

// Built-in harbour clearance example: two chained decision tables (ship
// clearance, refuel area) over a ship-type ontology.
Dkb ship_full();          // ontology + DRG + templates
Dkb ship_tables_only();   // same DRG, empty background ontology
Dkb ship_literal_phi();   // ship_full with only the weaker "phi" template

std::vector<std::string> fixture_names();
Dkb fixture(const std::string& name);  // throws DlError on unknown name

}  // namespace dkbv

#endif
