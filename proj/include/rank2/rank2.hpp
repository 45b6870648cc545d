#pragma once

#include "rank2/errors.hpp"
#include "rank2/laurent.hpp"
#include "rank2/dyck.hpp"
#include "rank2/roots.hpp"
#include "rank2/greedy.hpp"
#include "rank2/cluster.hpp"
#include "rank2/verify.hpp"
#include "rank2/acceptance.hpp"
