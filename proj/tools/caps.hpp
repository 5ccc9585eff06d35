#ifndef COXMUT_TOOLS_CAPS_HPP
#define COXMUT_TOOLS_CAPS_HPP

// Resource caps shared by the CLI and the service. COXMUT_CAPS overrides the
// defaults with a comma- or space-separated key=value list, e.g.
//   COXMUT_CAPS="max_size=50000,tc_cosets=200000,async_ms=500"
// Keys: max_size, max_weight, tc_cosets, closure, async_ms.

#include "coxmut/mutation_class.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

namespace coxmut::tools {

struct Caps {
    ClassCaps cls;
    std::size_t tc_cosets = 1000000;
    std::size_t closure = 100000;
    long async_ms = 2000; ///< service: answer 202 when an analysis runs longer

    static Caps parse(std::string_view spec)
    {
        Caps c;
        std::size_t pos = 0;
        while (pos < spec.size()) {
            const auto end = spec.find_first_of(", ", pos);
            const auto item = spec.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
            pos = end == std::string_view::npos ? spec.size() : end + 1;
            if (item.empty()) continue;
            const auto eq = item.find('=');
            if (eq == std::string_view::npos) throw InvalidInput("caps: expected key=value, got '" + std::string(item) + "'");
            const auto key = item.substr(0, eq);
            const auto val = item.substr(eq + 1);
            long long v = 0;
            const auto [p, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
            if (ec != std::errc{} || p != val.data() + val.size() || v <= 0)
                throw InvalidInput("caps: value for '" + std::string(key) + "' must be a positive integer");
            if (key == "max_size") c.cls.max_size = static_cast<std::size_t>(v);
            else if (key == "max_weight") c.cls.max_weight = v;
            else if (key == "tc_cosets") c.tc_cosets = static_cast<std::size_t>(v);
            else if (key == "closure") c.closure = static_cast<std::size_t>(v);
            else if (key == "async_ms") c.async_ms = static_cast<long>(v);
            else throw InvalidInput("caps: unknown key '" + std::string(key) + "'");
        }
        return c;
    }

    static Caps from_env()
    {
        const char* s = std::getenv("COXMUT_CAPS");
        return s ? parse(s) : Caps{};
    }
};

} // namespace coxmut::tools

#endif // COXMUT_TOOLS_CAPS_HPP
