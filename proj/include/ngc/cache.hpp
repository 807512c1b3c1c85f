#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ngc/evalmorphism.hpp"
#include "ngc/graphenc.hpp"
#include "ngc/multivector.hpp"

namespace ngc::cache {

/// Evaluation results are memoized in memory, keyed by
/// (canonical encoding, dimension, mode), and optionally persisted as one
/// JSON file per key under a content-addressed directory.

std::string eval_key(const std::string& canonical_encoding, int dim, EvalMode mode);

void set_directory(const std::string& dir);  // "" = memory only
std::string directory();
void set_enabled(bool enabled);
bool enabled();

std::optional<Multivector> get(const std::string& key, int dim);
void put(const std::string& key, const MicroGraph& g, EvalMode mode, const Multivector& value);

void clear_memory();

struct Entry {
    std::string key;
    std::string file;
};
std::vector<Entry> list_disk();
size_t clear_disk();

struct VerifyReport {
    size_t checked = 0;
    std::vector<std::string> corrupt_keys;
};
/// Re-evaluate up to sample_limit persisted entries and compare bit-exactly.
VerifyReport verify_disk(size_t sample_limit = SIZE_MAX);

}  // namespace ngc::cache
