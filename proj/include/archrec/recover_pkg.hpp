#pragma once

#include "archrec/model.hpp"

namespace archrec {

// One cluster per distinct package; root-package entities go to a
// cluster named "<default>".
Architecture recover_pkg(const EntitySet& entities);

}  // namespace archrec
