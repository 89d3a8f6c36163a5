// JSON document formats for polynomials, point families and reports, plus
// deterministic CSV writers.
#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <vector>

#include "mzforge/certifier.hpp"
#include "mzforge/complex_poly.hpp"
#include "mzforge/families.hpp"
#include "mzforge/geometry.hpp"
#include "mzforge/kernels.hpp"

namespace mzf {

// Generator provenance embedded in family files for reproducibility.
struct Provenance {
    std::string recipe;
    std::string params; // compact JSON text
    std::uint64_t seed = 0;
};

nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PointFamily& fam,
                       const std::optional<Provenance>& prov = std::nullopt);
PointFamily family_from_json(const nlohmann::json& j,
                             std::optional<Provenance>* prov = nullptr);

nlohmann::json to_json(const FrameReport& r);
nlohmann::json to_json(const SweepResult& r);
nlohmann::json to_json(const GeometryReport& r);
nlohmann::json to_json(const KernelBoundReport& r);
nlohmann::json to_json(const CarlesonReport& r);

void save_json(const std::string& path, const nlohmann::json& j);
nlohmann::json load_json(const std::string& path);

// formats doubles with %.17g so identical runs produce identical bytes
std::string format_double(double v);

class CsvWriter {
public:
    explicit CsvWriter(const std::string& path);
    ~CsvWriter();
    CsvWriter(const CsvWriter&) = delete;
    CsvWriter& operator=(const CsvWriter&) = delete;

    void comment(const std::string& key, const std::string& value);
    void comment(const std::string& key, double value);
    void header(const std::vector<std::string>& columns);
    void row(const std::vector<std::string>& cells);
    void row_values(const std::vector<double>& values);

private:
    struct Impl;
    Impl* impl_;
};

} // namespace mzf
