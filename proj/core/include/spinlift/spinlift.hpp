#pragma once

#include "spinlift/bivector.hpp"
#include "spinlift/clifford.hpp"
#include "spinlift/error.hpp"
#include "spinlift/expmap.hpp"
#include "spinlift/group_lift.hpp"
#include "spinlift/lorentz_transformation.hpp"
#include "spinlift/metric.hpp"
#include "spinlift/oracle.hpp"
#include "spinlift/spin.hpp"
