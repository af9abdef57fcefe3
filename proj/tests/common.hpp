#pragma once

#include "lns/config.hpp"

namespace lns::test {

inline const Config& config() {
    static const Config cfg = load_default_config();
    return cfg;
}

}  // namespace lns::test
