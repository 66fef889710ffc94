#pragma once

#include "tqmem/bounds.hpp"
#include "tqmem/sweep.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tqm {

/// CSV column order, also used as JSON field names.
inline constexpr std::string_view kCsvHeader =
    "t,alpha,u_berta,u_adabi,delta,k_berta,k_adabi,s_qb,s_rb,s_ab,i_ab,i_qb,i_rb";

/// Header plus one row per sample; 12 significant digits, '\n' endings.
std::string emit_csv(std::span<const BoundsSample> samples);

/// {"config": {...}, "samples": [{...}, ...]}
std::string emit_json(std::span<const BoundsSample> samples, const ExperimentConfig& config);

/// emit_csv or emit_json according to config.format. Throws DomainError
/// on an empty sample list.
std::string emit(std::span<const BoundsSample> samples, const ExperimentConfig& config);

std::vector<BoundsSample> parse_csv(std::string_view text);
std::vector<BoundsSample> parse_json(std::string_view text);

/// Writes bytes to path, or to stdout when path is "-". Throws IoError.
void write_output(std::string_view bytes, const std::string& path);

}  // namespace tqm
