#include "ngc/cache.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>

#include "ngc/json_io.hpp"

namespace ngc::cache {

namespace fs = std::filesystem;

namespace {

std::mutex g_mutex;
std::map<std::string, Multivector> g_memory;
std::string g_dir;
bool g_enabled = true;

std::string mode_name(EvalMode mode) {
    switch (mode) {
        case EvalMode::Plain: return "plain";
        case EvalMode::Skew: return "skew";
        case EvalMode::Sym: return "sym";
    }
    return "plain";
}

EvalMode mode_from_name(const std::string& s) {
    if (s == "skew") return EvalMode::Skew;
    if (s == "sym") return EvalMode::Sym;
    return EvalMode::Plain;
}

std::string fnv1a_hex(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

fs::path file_for(const std::string& key) { return fs::path(g_dir) / (fnv1a_hex(key) + ".json"); }

}  // namespace

std::string eval_key(const std::string& canonical_encoding, int dim, EvalMode mode) {
    return canonical_encoding + "|d=" + std::to_string(dim) + "|" + mode_name(mode);
}

void set_directory(const std::string& dir) {
    std::lock_guard lock(g_mutex);
    g_dir = dir;
    if (!g_dir.empty()) fs::create_directories(g_dir);
}

std::string directory() {
    std::lock_guard lock(g_mutex);
    return g_dir;
}

void set_enabled(bool enabled) {
    std::lock_guard lock(g_mutex);
    g_enabled = enabled;
}

bool enabled() {
    std::lock_guard lock(g_mutex);
    return g_enabled;
}

std::optional<Multivector> get(const std::string& key, int dim) {
    std::lock_guard lock(g_mutex);
    if (!g_enabled) return std::nullopt;
    auto it = g_memory.find(key);
    if (it != g_memory.end()) return it->second;
    if (g_dir.empty()) return std::nullopt;
    fs::path file = file_for(key);
    if (!fs::exists(file)) return std::nullopt;
    std::ifstream in(file);
    json j = json::parse(in);
    if (j.at("key").get<std::string>() != key) return std::nullopt;  // hash collision
    Multivector v = multivector_from_json(j.at("value"));
    if (v.dim() != dim) return std::nullopt;
    g_memory.emplace(key, v);
    return v;
}

void put(const std::string& key, const MicroGraph& g, EvalMode mode, const Multivector& value) {
    std::lock_guard lock(g_mutex);
    if (!g_enabled) return;
    g_memory.insert_or_assign(key, value);
    if (g_dir.empty()) return;
    json j = {{"key", key},
              {"encoding", serialize_encoding(g)},
              {"dim", g.dim},
              {"has_sink", g.has_sink},
              {"mode", mode_name(mode)},
              {"value", multivector_to_json(value)}};
    std::ofstream out(file_for(key));
    out << j.dump(1) << "\n";
}

void clear_memory() {
    std::lock_guard lock(g_mutex);
    g_memory.clear();
}

std::vector<Entry> list_disk() {
    std::vector<Entry> out;
    std::string dir;
    {
        std::lock_guard lock(g_mutex);
        dir = g_dir;
    }
    if (dir.empty() || !fs::exists(dir)) return out;
    for (const auto& e : fs::directory_iterator(dir)) {
        if (e.path().extension() != ".json") continue;
        std::ifstream in(e.path());
        try {
            json j = json::parse(in);
            out.push_back({j.at("key").get<std::string>(), e.path().filename().string()});
        } catch (const json::exception&) {
            out.push_back({"<unreadable>", e.path().filename().string()});
        }
    }
    std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.key < b.key; });
    return out;
}

size_t clear_disk() {
    std::string dir;
    {
        std::lock_guard lock(g_mutex);
        dir = g_dir;
    }
    if (dir.empty() || !fs::exists(dir)) return 0;
    size_t n = 0;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json") n += fs::remove(e.path());
    return n;
}

VerifyReport verify_disk(size_t sample_limit) {
    VerifyReport report;
    std::string dir;
    {
        std::lock_guard lock(g_mutex);
        dir = g_dir;
    }
    if (dir.empty() || !fs::exists(dir)) return report;

    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());

    for (const auto& file : files) {
        if (report.checked >= sample_limit) break;
        std::string key = "<unreadable " + file.filename().string() + ">";
        try {
            std::ifstream in(file);
            json j = json::parse(in);
            key = j.at("key").get<std::string>();
            MicroGraph g = parse_encoding(j.at("encoding").get<std::string>(),
                                          j.at("dim").get<int>(), j.at("has_sink").get<bool>());
            Multivector stored = multivector_from_json(j.at("value"));

            set_enabled(false);
            Multivector fresh = evaluate_mode(g, mode_from_name(j.at("mode").get<std::string>()));
            set_enabled(true);

            ++report.checked;
            if (!(fresh == stored)) report.corrupt_keys.push_back(key);
        } catch (const std::exception&) {
            set_enabled(true);
            ++report.checked;
            report.corrupt_keys.push_back(key);
        }
    }
    return report;
}

}  // namespace ngc::cache
