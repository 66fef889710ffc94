#include "tqmem/sweep.hpp"

#include <array>
#include <utility>

namespace tqm {

namespace {

// B = 0.1 and N_sc = 1 throughout; gamma0 = epsilon = 1.
constexpr double kCoupling = 0.1;

std::vector<Preset> build_presets() {
    struct Figure {
        const char* tag;
        const char* what;
        BellDiagonalState state;
    };
    const std::array<Figure, 2> figures = {{
        {"fig3", "uncertainty bounds, c = (-0.6, 0.5, 0.5)", {-0.6, 0.5, 0.5}},
        {"fig4", "key-rate bounds, c = (1, -1, 1)", {1.0, -1.0, 1.0}},
    }};
    const std::array<std::pair<const char*, EnvironmentKind>, 2> kinds = {{
        {"f", EnvironmentKind::fermionic},
        {"b", EnvironmentKind::bosonic},
    }};
    const std::array<std::pair<const char*, double>, 3> ohmicities = {{
        {"sub", 0.5},
        {"ohmic", 1.0},
        {"super", 2.5},
    }};

    std::vector<Preset> out;
    for (const auto& fig : figures) {
        for (const auto& [kind_tag, kind] : kinds) {
            for (const auto& [s_tag, s] : ohmicities) {
                ExperimentConfig config;
                config.environment.kind = kind;
                config.environment.s = s;
                config.environment.coupling = kCoupling;
                config.initial_state = fig.state;
                std::string name = std::string(fig.tag) + "-" + kind_tag + "-" + s_tag;
                std::string description = std::string(fig.what) + ", " +
                                          std::string(to_string(kind)) + " s=" +
                                          std::to_string(s).substr(0, 3);
                out.push_back({std::move(name), std::move(description), std::move(config)});
            }
        }
    }
    return out;
}

}  // namespace

const std::vector<Preset>& presets() {
    static const std::vector<Preset> all = build_presets();
    return all;
}

std::optional<ExperimentConfig> find_preset(std::string_view name) {
    for (const auto& p : presets()) {
        if (p.name == name) {
            return p.config;
        }
    }
    return std::nullopt;
}

}  // namespace tqm
