#include "trisub/format.hpp"

#include <cmath>
#include <cstdio>

namespace trisub {

std::string format_real(double v) {
    if (!std::isfinite(v)) {
        return "null";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

void dump_into(const nlohmann::json& j, std::string& out) {
    switch (j.type()) {
        case nlohmann::json::value_t::object: {
            out += '{';
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out += ',';
                first = false;
                out += nlohmann::json(key).dump();
                out += ':';
                dump_into(value, out);
            }
            out += '}';
            break;
        }
        case nlohmann::json::value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& value : j) {
                if (!first) out += ',';
                first = false;
                dump_into(value, out);
            }
            out += ']';
            break;
        }
        case nlohmann::json::value_t::number_float:
            out += format_real(j.get<double>());
            break;
        default:
            out += j.dump();
    }
}

}  // namespace

std::string dump_json(const nlohmann::json& j) {
    std::string out;
    dump_into(j, out);
    return out;
}

}  // namespace trisub
