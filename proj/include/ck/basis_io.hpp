#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "ck/basis.hpp"

namespace ck {

using OrderedJson = nlohmann::ordered_json;

OrderedJson approx_to_json(const Approx& x);
Approx approx_from_json(long p, const OrderedJson& j);
OrderedJson padic_to_json(const PadicNumber& x);
PadicNumber padic_from_json(const OrderedJson& j);

// Full basis plus expansion table, versioned ("ck-basis", version 1).
OrderedJson basis_to_json(const BasisResult& r);
BasisResult basis_from_json(const OrderedJson& j);

// Cache file name for a search; every input that changes the result is in it.
std::string basis_cache_name(long q_s, int n, const BasisSchedule& schedule, std::optional<long> prime);

// build_basis with an on-disk cache. A missing cache_dir disables caching;
// an unreadable cache file is rebuilt and overwritten.
BasisResult cached_build_basis(long q_s, int n, const BasisSchedule& schedule, std::optional<long> prime,
                               const std::optional<std::filesystem::path>& cache_dir);

}  // namespace ck
