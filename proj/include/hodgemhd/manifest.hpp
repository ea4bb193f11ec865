#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hodgemhd/sha1.hpp"

namespace hodgemhd {

/// Reproducibility record of one CLI run: the effective configuration text,
/// its git-style content hash, the seed, timestamps, and the files written.
/// Identical config text and seed imply byte-identical CSV artifacts; the
/// timestamps live only here, never inside the CSVs.
struct RunManifest {
    std::string command;
    std::string config_echo; // canonical key = value lines
    std::uint64_t seed = 0;
    std::string started;
    std::string finished;
    std::vector<std::string> artifacts;

    static std::string now_iso8601() {
        const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        char buf[32];
        std::tm tm{};
        gmtime_r(&t, &tm);
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
        return buf;
    }

    void write(const std::string& path) const {
        nlohmann::json j;
        j["command"] = command;
        j["config"] = config_echo;
        j["config_hash"] = git_blob_hash(config_echo);
        j["seed"] = seed;
        j["started"] = started;
        j["finished"] = finished;
        j["artifacts"] = artifacts;
        std::ofstream out(path);
        out << j.dump(2) << "\n";
    }
};

} // namespace hodgemhd
