#pragma once

#include <string>

#include "json.hpp"

#include "chowforge/betti.hpp"
#include "chowforge/building_sets.hpp"
#include "chowforge/chow_ring.hpp"
#include "chowforge/koszul.hpp"
#include "chowforge/lattice.hpp"
#include "chowforge/matroid.hpp"
#include "chowforge/polynomial.hpp"

namespace chowforge {

/// Keys keep insertion order so reports are byte-stable.
using Json = nlohmann::ordered_json;

/// "Q", "0", "7", "p=7", "GF(7)".
FieldDescriptor parse_field(const std::string& text);
/// "Q" or {"p": prime}.
Json field_to_json(const FieldDescriptor& f);
FieldDescriptor field_from_json(const Json& j);

/// {"ground": n, "kind": ..., payload}; optional "name" and "field".
Json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const Json& j);

/// Flat lattices: flats by rank, covers, coatom order per rank. Raw lattices:
/// {"elements": [names], "covers": [[lower, upper], ...]}.
Json lattice_to_json(const Lattice& l);
/// Accepts the raw format, the flat-lattice export, or a matroid object.
Lattice lattice_from_json(const Json& j);

/// Relations as lists of {"exponents": [...], "coeff": "p/q"}.
Json presentation_to_json(const PresentedAlgebra& a);
PresentedAlgebra presentation_from_json(const Json& j);

Json betti_to_json(const BettiTable& b);

/// {"augmented": bool, "terms": [{"chain": [[...], ...], "exponents": [...], "coeff": "p/q"}]}.
Json element_to_json(const ChowRing& r, const ChowElement& e);
/// Also accepts a bare term list.
ChowElement element_from_json(const ChowRing& r, const Json& j);

Json certificate_to_json(const KoszulCertificate& c);
Json filtration_to_json(const FiltrationReport& f);
Json check_report_to_json(const CheckReport& c);
Json hilbert_to_json(const std::vector<int>& hf);

Json read_json_file(const std::string& path);
/// Two-space indent and a trailing newline.
void write_json_file(const std::string& path, const Json& j);

}  // namespace chowforge
