#pragma once

#include "ortholab/error.hpp"
#include "ortholab/table.hpp"
#include "ortholab/report.hpp"
#include "ortholab/order.hpp"
#include "ortholab/canonical.hpp"
#include "ortholab/ortho.hpp"
#include "ortholab/residuated.hpp"
#include "ortholab/correspondence.hpp"
#include "ortholab/search.hpp"
#include "ortholab/catalog.hpp"
#include "ortholab/format.hpp"
#include "ortholab/dot.hpp"
