#pragma once

#include "bisem/algebra.hpp"
#include "bisem/balbes.hpp"
#include "bisem/balg.hpp"
#include "bisem/builtin.hpp"
#include "bisem/enumerate.hpp"
#include "bisem/errors.hpp"
#include "bisem/filters.hpp"
#include "bisem/kleene.hpp"
#include "bisem/laws.hpp"
#include "bisem/morphism.hpp"
#include "bisem/order.hpp"
#include "bisem/plonka.hpp"
#include "bisem/report.hpp"
#include "bisem/subset.hpp"
#include "bisem/twospace.hpp"
