#ifndef SEVENCORE_CACHE_HPP
#define SEVENCORE_CACHE_HPP

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "records.hpp"

namespace sevencore
{

// UTC time in ISO 8601, second resolution.
inline std::string utc_timestamp()
{
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

inline cache_record make_cache_record(const scan_report& r)
{
    return {r.name, r.range, to_string(r.status), r.exceptions_found, utc_timestamp(), version_string};
}

// Line-delimited JSON store of completed scans. A missing file is an empty
// cache; blank lines are ignored; anything else that does not parse as a
// cache record raises cache_corrupt with its 1-based line number.
class scan_cache
{
public:
    explicit scan_cache(std::filesystem::path path) : path_(std::move(path))
    {
        std::ifstream in(path_);
        if (!in) {
            return;
        }
        std::string line;
        std::size_t number = 0;
        while (std::getline(in, line)) {
            ++number;
            if (line.find_first_not_of(" \t\r") == std::string::npos) {
                continue;
            }
            try {
                records_.push_back(cache_record_from_json(json::parse(line)));
            } catch (const json::parse_error& e) {
                throw cache_corrupt(path_.string(), number, "invalid JSON");
            } catch (const error& e) {
                throw cache_corrupt(path_.string(), number, e.what());
            }
        }
    }

    const std::filesystem::path& path() const noexcept { return path_; }
    const std::vector<cache_record>& records() const noexcept { return records_; }

    // Latest VERIFIED record for (check, range), if any.
    std::optional<cache_record> find_verified(const std::string& check, std::uint64_t range) const
    {
        for (auto it = records_.rbegin(); it != records_.rend(); ++it) {
            if (it->check == check && it->range == range && it->status == "VERIFIED") {
                return *it;
            }
        }
        return std::nullopt;
    }

    void append(const cache_record& rec)
    {
        std::ofstream out(path_, std::ios::app);
        if (!out) {
            throw error("cannot open cache file " + path_.string() + " for writing");
        }
        out << to_json(rec).dump() << '\n';
        if (!out.flush()) {
            throw error("failed writing cache file " + path_.string());
        }
        records_.push_back(rec);
    }

private:
    std::filesystem::path path_;
    std::vector<cache_record> records_;
};

} // namespace sevencore

#endif
