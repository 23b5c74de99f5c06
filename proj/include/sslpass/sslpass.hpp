#pragma once

#include "sslpass/ball.hpp"
#include "sslpass/cacop.hpp"
#include "sslpass/config.hpp"
#include "sslpass/features.hpp"
#include "sslpass/geometry.hpp"
#include "sslpass/grid.hpp"
#include "sslpass/interception.hpp"
#include "sslpass/kinematics.hpp"
#include "sslpass/mlp.hpp"
#include "sslpass/parallel.hpp"
#include "sslpass/rl.hpp"
#include "sslpass/robot.hpp"
#include "sslpass/scoring.hpp"
#include "sslpass/search.hpp"
#include "sslpass/selfplay.hpp"
#include "sslpass/sim.hpp"
