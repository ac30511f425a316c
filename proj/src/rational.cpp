#include "dln/rational.hpp"

namespace dln {

std::string to_string(const mpq_class& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

mpq_class rational_from_string(const std::string& text) {
    if (text.empty()) throw RangeError("empty rational");
    mpq_class r;
    if (r.set_str(text, 10) != 0)
        throw RangeError("bad rational '" + text + "'");
    if (r.get_den() == 0) throw RangeError("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const ExtendedRational& v) {
    return v.is_inf ? "inf" : to_string(v.value);
}

ExtendedRational extended_from_string(const std::string& text) {
    if (text == "inf") return ExtendedRational::infinity();
    return ExtendedRational(rational_from_string(text));
}

}  // namespace dln
