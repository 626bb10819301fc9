#pragma once

#include "toricity/network.hpp"

#include <filesystem>
#include <string>

#include "json.hpp"

namespace toricity {

struct MatrixInput {
    VerticalSystem system;
    GroupMode mode = GroupMode::Positive;
    Tri boundary = Tri::Unknown;
};

/// {"C": [["1","-1"]], "M": [[1,0],[0,1]], "mode": "positive"}; "N" may
/// replace "C", in which case C is its row basis. Optional "boundary":
/// "yes" asserts condition (i) of the constant-coset criterion.
MatrixInput parse_matrix_json(const std::string& text);

/// Sections "# C", "# N" or "# M" followed by comma-separated rows.
MatrixInput parse_matrix_csv(const std::string& text);

std::string write_matrix_json(const VerticalSystem& sys, GroupMode mode);

enum class ModelKind { Matrix, Network };

/// .json and .csv are matrix inputs; everything else is network text.
ModelKind model_kind(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

nlohmann::ordered_json to_json(const ToricityReport& report);
nlohmann::ordered_json to_json(const NetworkAnalysis& analysis);

std::string render_text(const ToricityReport& report);
std::string render_text(const NetworkAnalysis& analysis);

}  // namespace toricity
