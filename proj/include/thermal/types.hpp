#pragma once

#include <Eigen/Dense>

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace thermal {

using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RowVector = Eigen::RowVectorXd;

// Error categories. The CLI maps InputError to exit 1 and everything else
// derived from Error to exit 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InputError : public Error {
public:
    using Error::Error;
};

class FormatError : public InputError {
public:
    using InputError::InputError;
};

class DataError : public InputError {
public:
    using InputError::InputError;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

class TrainingError : public Error {
public:
    using Error::Error;
};

class InvariantError : public Error {
public:
    using Error::Error;
};

/// Merged five-point thermal sensation scale, cold (-2) to hot (+2).
class SensationClass {
public:
    static constexpr int kCount = 5;

    constexpr SensationClass() = default;
    constexpr explicit SensationClass(int value) : value_(static_cast<std::int8_t>(value)) {
        if (value < -2 || value > 2) {
            throw std::invalid_argument("sensation class out of range: " + std::to_string(value));
        }
    }

    static constexpr SensationClass from_index(std::size_t index) {
        return SensationClass(static_cast<int>(index) - 2);
    }

    constexpr int value() const { return value_; }
    // Position in the one-hot order [-2, -1, 0, +1, +2].
    constexpr std::size_t index() const { return static_cast<std::size_t>(value_ + 2); }

    constexpr auto operator<=>(const SensationClass&) const = default;

private:
    std::int8_t value_ = 0;
};

inline constexpr std::array<SensationClass, SensationClass::kCount> kAllClasses{
    SensationClass(-2), SensationClass(-1), SensationClass(0), SensationClass(1), SensationClass(2)};

using Labels = std::vector<SensationClass>;

/// Köppen main climate group.
enum class ClimateZone : std::uint8_t { A, B, C, D, E };

inline constexpr std::array<ClimateZone, 5> kAllZones{ClimateZone::A, ClimateZone::B, ClimateZone::C,
                                                      ClimateZone::D, ClimateZone::E};

char zone_letter(ClimateZone zone);
std::string_view zone_name(ClimateZone zone);
/// Accepts a main-group letter or any Köppen code starting with one ("Cfa"), or a
/// group name ("temperate").
std::optional<ClimateZone> parse_zone(std::string_view text);

enum class Ventilation : std::uint8_t { hvac, nv, mixed, unknown };

std::string_view ventilation_name(Ventilation v);
std::optional<Ventilation> parse_ventilation(std::string_view text);

enum class Gender : std::uint8_t { male, female, other };

std::string_view gender_name(Gender g);
std::optional<Gender> parse_gender(std::string_view text);
/// Numeric encoding used in design matrices: male 0, female 1, other 0.5.
double encode_gender(Gender g);

/// Provenance of a design-matrix row. Original rows carry the index of the
/// record they came from; synthetic rows carry the index of the row they were
/// derived from (or none for generator samples).
struct RowTag {
    std::size_t origin = 0;
    bool synthetic = false;

    friend bool operator==(const RowTag&, const RowTag&) = default;
};

/// A design matrix with labels, column names and per-row provenance.
struct LabeledData {
    Matrix features;
    Labels labels;
    std::vector<std::string> feature_names;
    std::vector<RowTag> tags;

    std::size_t rows() const { return labels.size(); }
    std::size_t cols() const { return feature_names.size(); }

    LabeledData subset(const std::vector<std::size_t>& rows) const;
    LabeledData select_columns(const std::vector<std::string>& names) const;
};

std::array<std::size_t, SensationClass::kCount> class_counts(const Labels& labels);

}  // namespace thermal
