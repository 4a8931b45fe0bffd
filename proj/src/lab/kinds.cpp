#include "twofold/lab/kinds.hpp"

#include <stdexcept>

namespace twofold::lab {

const char* kind_name(Kind k) {
    switch (k) {
    case Kind::dotted32: return "dotted32";
    case Kind::dotted64: return "dotted64";
    case Kind::twofold32: return "twofold32";
    case Kind::twofold64: return "twofold64";
    case Kind::coupled32: return "coupled32";
    case Kind::coupled64: return "coupled64";
    }
    return "?";
}

Kind parse_kind(std::string_view name) {
    for (const Kind k : all_kinds)
        if (name == kind_name(k)) return k;
    throw std::invalid_argument("unknown kind '" + std::string(name) + "'");
}

int kind_width(Kind k) {
    switch (k) {
    case Kind::dotted32:
    case Kind::twofold32:
    case Kind::coupled32: return 32;
    default: return 64;
    }
}

Shape kind_shape(Kind k) {
    switch (k) {
    case Kind::dotted32:
    case Kind::dotted64: return Shape::dotted;
    case Kind::twofold32:
    case Kind::twofold64: return Shape::twofold;
    default: return Shape::coupled;
    }
}

Kind dotted_kind(int width) { return width == 32 ? Kind::dotted32 : Kind::dotted64; }

}  // namespace twofold::lab
