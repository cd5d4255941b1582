#ifndef SSAR_TESTS_REFERENCE_TABLES_HPP
#define SSAR_TESTS_REFERENCE_TABLES_HPP

// Reference Monte Carlo grid means (1000 replicates per cell) for the AR(1)
// and ARMA(1,2) quadratic-root estimator, indexed as [T][lag][phi] with
// T in {50, 500, 5000, 50000}, lag in 1..10 and phi in 0.1..0.9.

namespace reftables {

inline constexpr double kPhis[9] = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
inline constexpr int kLags[10] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
inline constexpr int kLengths[4] = {50, 500, 5000, 50000};

inline constexpr double kAr1Means[4][10][9] = {
    {
        {0.10, 0.18, 0.27, 0.38, 0.48, 0.57, 0.67, 0.77, 0.85},
        {0.25, 0.26, 0.30, 0.35, 0.45, 0.54, 0.64, 0.74, 0.82},
        {0.32, 0.35, 0.35, 0.40, 0.41, 0.48, 0.57, 0.69, 0.80},
        {0.30, 0.37, 0.42, 0.47, 0.50, 0.52, 0.55, 0.66, 0.77},
        {0.33, 0.39, 0.42, 0.50, 0.53, 0.57, 0.61, 0.65, 0.75},
        {0.34, 0.37, 0.42, 0.47, 0.56, 0.60, 0.66, 0.69, 0.74},
        {0.32, 0.37, 0.43, 0.49, 0.57, 0.60, 0.68, 0.69, 0.75},
        {0.32, 0.34, 0.45, 0.51, 0.57, 0.64, 0.69, 0.72, 0.76},
        {0.31, 0.37, 0.44, 0.50, 0.59, 0.64, 0.70, 0.73, 0.78},
        {0.34, 0.35, 0.43, 0.51, 0.58, 0.64, 0.70, 0.75, 0.78},
    },
    {
        {0.10, 0.20, 0.30, 0.40, 0.50, 0.60, 0.70, 0.80, 0.90},
        {0.23, 0.24, 0.30, 0.40, 0.51, 0.60, 0.70, 0.80, 0.91},
        {0.29, 0.31, 0.34, 0.40, 0.50, 0.61, 0.71, 0.81, 0.91},
        {0.32, 0.37, 0.40, 0.40, 0.49, 0.61, 0.70, 0.81, 0.90},
        {0.30, 0.37, 0.42, 0.48, 0.50, 0.58, 0.70, 0.81, 0.90},
        {0.30, 0.36, 0.44, 0.47, 0.53, 0.58, 0.68, 0.80, 0.90},
        {0.30, 0.37, 0.44, 0.49, 0.53, 0.57, 0.65, 0.79, 0.90},
        {0.32, 0.39, 0.44, 0.51, 0.57, 0.61, 0.68, 0.76, 0.90},
        {0.30, 0.38, 0.45, 0.51, 0.59, 0.63, 0.68, 0.75, 0.89},
        {0.32, 0.39, 0.46, 0.52, 0.58, 0.64, 0.70, 0.75, 0.89},
    },
    {
        {0.10, 0.20, 0.30, 0.40, 0.50, 0.60, 0.70, 0.80, 0.90},
        {0.13, 0.20, 0.30, 0.40, 0.50, 0.60, 0.70, 0.80, 0.90},
        {0.26, 0.27, 0.32, 0.40, 0.50, 0.60, 0.70, 0.80, 0.90},
        {0.30, 0.32, 0.34, 0.42, 0.51, 0.61, 0.70, 0.80, 0.90},
        {0.29, 0.37, 0.38, 0.43, 0.51, 0.62, 0.71, 0.80, 0.90},
        {0.31, 0.37, 0.41, 0.45, 0.49, 0.62, 0.71, 0.81, 0.90},
        {0.29, 0.38, 0.40, 0.47, 0.52, 0.59, 0.72, 0.81, 0.90},
        {0.29, 0.40, 0.45, 0.51, 0.54, 0.58, 0.71, 0.81, 0.91},
        {0.32, 0.37, 0.41, 0.50, 0.54, 0.60, 0.68, 0.82, 0.91},
        {0.29, 0.37, 0.41, 0.51, 0.57, 0.61, 0.68, 0.82, 0.91},
    },
    {
        {0.10, 0.20, 0.30, 0.40, 0.50, 0.60, 0.70, 0.80, 0.90},
        {0.10, 0.20, 0.30, 0.40, 0.50, 0.60, 0.70, 0.80, 0.90},
        {0.21, 0.21, 0.30, 0.40, 0.50, 0.60, 0.70, 0.80, 0.90},
        {0.28, 0.30, 0.33, 0.40, 0.50, 0.60, 0.70, 0.80, 0.90},
        {0.29, 0.34, 0.36, 0.41, 0.51, 0.60, 0.70, 0.80, 0.90},
        {0.29, 0.37, 0.39, 0.42, 0.52, 0.60, 0.70, 0.80, 0.90},
        {0.29, 0.37, 0.44, 0.45, 0.51, 0.61, 0.70, 0.80, 0.90},
        {0.31, 0.37, 0.43, 0.48, 0.49, 0.62, 0.70, 0.80, 0.90},
        {0.31, 0.35, 0.43, 0.49, 0.53, 0.60, 0.71, 0.80, 0.90},
        {0.32, 0.37, 0.42, 0.48, 0.53, 0.58, 0.72, 0.80, 0.90},
    },
};

inline constexpr double kArmaMeans[4][10][9] = {
    {
        {0.08, 0.14, 0.22, 0.32, 0.41, 0.52, 0.61, 0.72, 0.81},
        {0.09, 0.13, 0.20, 0.30, 0.39, 0.50, 0.60, 0.72, 0.82},
        {0.32, 0.33, 0.32, 0.34, 0.40, 0.46, 0.58, 0.71, 0.81},
        {0.65, 0.66, 0.62, 0.60, 0.60, 0.56, 0.60, 0.68, 0.78},
        {0.64, 0.67, 0.69, 0.70, 0.69, 0.69, 0.69, 0.70, 0.77},
        {0.64, 0.68, 0.69, 0.72, 0.74, 0.75, 0.76, 0.75, 0.78},
        {0.64, 0.67, 0.70, 0.72, 0.77, 0.78, 0.79, 0.79, 0.80},
        {0.65, 0.67, 0.71, 0.72, 0.76, 0.79, 0.81, 0.80, 0.83},
        {0.63, 0.68, 0.72, 0.74, 0.78, 0.80, 0.82, 0.83, 0.84},
        {0.65, 0.68, 0.70, 0.74, 0.78, 0.80, 0.83, 0.85, 0.85},
    },
    {
        {0.09, 0.19, 0.29, 0.39, 0.49, 0.59, 0.69, 0.80, 0.90},
        {0.09, 0.19, 0.28, 0.39, 0.49, 0.59, 0.69, 0.79, 0.90},
        {0.12, 0.18, 0.26, 0.37, 0.48, 0.59, 0.69, 0.79, 0.90},
        {0.58, 0.49, 0.38, 0.37, 0.45, 0.57, 0.69, 0.79, 0.90},
        {0.64, 0.65, 0.62, 0.57, 0.52, 0.56, 0.68, 0.79, 0.90},
        {0.65, 0.68, 0.67, 0.68, 0.66, 0.61, 0.67, 0.79, 0.90},
        {0.66, 0.68, 0.69, 0.71, 0.72, 0.69, 0.69, 0.78, 0.90},
        {0.66, 0.68, 0.71, 0.72, 0.75, 0.73, 0.72, 0.78, 0.90},
        {0.66, 0.68, 0.71, 0.74, 0.76, 0.75, 0.76, 0.77, 0.90},
        {0.65, 0.68, 0.71, 0.74, 0.77, 0.78, 0.78, 0.78, 0.89},
    },
    {
        {0.10, 0.20, 0.30, 0.40, 0.50, 0.60, 0.70, 0.80, 0.90},
        {0.10, 0.20, 0.30, 0.40, 0.50, 0.60, 0.70, 0.80, 0.90},
        {0.10, 0.19, 0.30, 0.40, 0.50, 0.60, 0.70, 0.80, 0.90},
        {0.34, 0.21, 0.27, 0.39, 0.50, 0.60, 0.70, 0.80, 0.90},
        {0.61, 0.55, 0.40, 0.37, 0.48, 0.60, 0.70, 0.80, 0.90},
        {0.65, 0.65, 0.62, 0.50, 0.48, 0.59, 0.70, 0.80, 0.90},
        {0.63, 0.68, 0.67, 0.63, 0.58, 0.57, 0.70, 0.80, 0.90},
        {0.64, 0.68, 0.68, 0.71, 0.69, 0.60, 0.69, 0.80, 0.90},
        {0.65, 0.69, 0.69, 0.73, 0.71, 0.67, 0.68, 0.80, 0.90},
        {0.64, 0.67, 0.71, 0.75, 0.74, 0.74, 0.69, 0.80, 0.90},
    },
    {
        {0.10, 0.20, 0.30, 0.40, 0.50, 0.60, 0.70, 0.80, 0.90},
        {0.10, 0.20, 0.30, 0.40, 0.50, 0.60, 0.70, 0.80, 0.90},
        {0.10, 0.20, 0.30, 0.40, 0.50, 0.60, 0.70, 0.80, 0.90},
        {0.13, 0.19, 0.30, 0.40, 0.50, 0.60, 0.70, 0.80, 0.90},
        {0.56, 0.30, 0.28, 0.39, 0.50, 0.60, 0.70, 0.80, 0.90},
        {0.62, 0.60, 0.41, 0.37, 0.50, 0.60, 0.70, 0.80, 0.90},
        {0.63, 0.65, 0.63, 0.46, 0.47, 0.60, 0.70, 0.80, 0.90},
        {0.64, 0.66, 0.68, 0.63, 0.49, 0.59, 0.70, 0.80, 0.90},
        {0.62, 0.67, 0.69, 0.71, 0.60, 0.58, 0.70, 0.80, 0.90},
        {0.65, 0.67, 0.71, 0.73, 0.70, 0.59, 0.70, 0.80, 0.90},
    },
};

}  // namespace reftables

#endif  // SSAR_TESTS_REFERENCE_TABLES_HPP
