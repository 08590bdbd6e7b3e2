"""End-to-end smoke checks for the Python bindings."""

import math
import os
import tempfile

import numpy as np

import percept


def test_catalogue():
    ids = percept.environment_ids()
    assert len(ids) == 15, ids
    assert ids[0] == "CircleSquare"
    assert "LightDark" in ids
    assert "TactileMNIST" in ids

    agents = percept.builtin_agent_names()
    assert set(agents) == {
        "random",
        "stay",
        "oracle",
        "lightdark-seeker",
        "gradient-climber",
    }, agents

    table = percept.constants()
    assert table["step_limits"]["CircleSquare"] == 16
    assert table["step_limits"]["Toolbox"] == 64
    assert table["gel_thickness_mm"] == 4.25
    assert table["glimpse_move_scale"] == 0.2
    assert table["mnist3d_per_class"]["train"] == 1148


def test_env_step_api():
    env = percept.Env("LightDark")
    assert env.env_id == "LightDark"
    assert env.base_action_dim == 2
    assert env.prediction_kind == "regression"
    assert env.prediction_size == 2
    assert env.step_limit == 16
    assert env.reward_bonus == 0.1

    obs = env.reset(3)
    assert obs, "reset returned an empty observation"
    for value in obs.values():
        assert isinstance(value, np.ndarray)
        assert value.dtype == np.float32

    steps = 0
    while not env.episode_done:
        out = env.step([0.25, -0.5], [0.0, 0.0])
        steps += 1
        assert env.step_index == steps
        assert out["loss"] >= 0.0
        norm = math.hypot(0.25, 0.5)
        expected = env.reward_bonus - 1e-3 * norm - out["loss"]
        assert abs(out["reward"] - expected) < 1e-9
        assert out["effective_prediction"].shape == (2,)
    assert steps == env.step_limit

    # Same seed, same trajectory.
    env_b = percept.Env("LightDark")
    first_a = env.reset(9)
    first_b = env_b.reset(9)
    assert sorted(first_a) == sorted(first_b)
    for key in first_a:
        assert np.array_equal(first_a[key], first_b[key]), key


def test_classification_env():
    env = percept.Env("CircleSquare", split="test")
    assert env.prediction_kind == "classification"
    assert env.prediction_size == 2
    env.reset(0)
    out = env.step([0.0, 0.0], [1.0, -1.0])
    assert set(out["metrics"]) >= {"accuracy", "correct_label_prob"}
    glimpse = out["obs"]["glimpse"]
    assert glimpse.shape == (5, 5)


def test_run_and_replay():
    with tempfile.TemporaryDirectory() as out_dir:
        result = percept.run(
            "CircleSquare", agent="oracle", episodes=2, seed=11, out_dir=out_dir
        )
        assert result["episodes"] == 2
        assert result["average"]["accuracy"]["value"] == 1.0
        assert result["final"]["accuracy"]["value"] == 1.0
        assert result["average"]["loss"]["episodes"] == 2

        logs = sorted(os.listdir(out_dir))
        assert logs == ["episode_000000.jsonl", "episode_000001.jsonl"], logs
        report = percept.replay(os.path.join(out_dir, logs[0]))
        assert report["ok"], report["detail"]


def test_errors():
    try:
        percept.Env("NoSuchEnv")
    except percept.Error:
        pass
    else:
        raise AssertionError("unknown environment id was accepted")

    try:
        percept.run("CircleSquare", agent="nope")
    except percept.Error:
        pass
    else:
        raise AssertionError("unknown agent name was accepted")


def main():
    test_catalogue()
    test_env_step_api()
    test_classification_env()
    test_run_and_replay()
    test_errors()
    print("python smoke ok")


if __name__ == "__main__":
    main()
