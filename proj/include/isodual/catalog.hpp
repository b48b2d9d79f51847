#pragma once

#include "isodual/group_spec.hpp"

#include <string>
#include <vector>

namespace isodual
{

Eigen::MatrixXd rotation2(double angle);
//! Block-diagonal sum of square matrices.
Eigen::MatrixXd block_diag(const std::vector<Eigen::MatrixXd>& blocks);

struct CatalogEntry
{
    std::string name;
    std::string description;
    GroupSpec spec;
    //! Expected values for regression against recomputation.
    long long expected_m0 = 0;
    int expected_f_order = 0;
    int expected_point_order = 0;
};

const std::vector<CatalogEntry>& catalog();
//! Throws FormatError for unknown names.
const CatalogEntry& catalog_entry(const std::string& name);
std::vector<std::string> catalog_names();

} // namespace isodual
