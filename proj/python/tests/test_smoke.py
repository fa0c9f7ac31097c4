import math

import pytest

import cogail


def test_env_step_is_deterministic():
    env = cogail.FetchQuest()
    a = env.reset(5)
    b = env.reset(5)
    assert a == b
    for _ in range(10):
        a = env.step(a, (1.0, 0.0), (0.0, -1.0))
        b = env.step(b, (1.0, 0.0), (0.0, -1.0))
    assert a == b
    assert a.step == 10
    assert len(env.observe(a)) == 10


def test_action_clamping():
    env = cogail.FetchQuest()
    s = env.reset(1)
    x0 = s.human_pos[0]
    s = env.step(s, (5.0, 0.0), (0.0, 0.0))
    speed = env.layout()["speed_scale"]
    assert s.human_pos[0] - x0 == pytest.approx(speed, abs=1e-12)


def test_nan_action_rejected():
    env = cogail.FetchQuest()
    with pytest.raises(ValueError):
        env.step(env.reset(0), (math.nan, 0.0), (0.0, 0.0))


def test_dataset_round_trip(tmp_path):
    ds = cogail.generate_dataset(8, seed=3)
    assert list(ds.strategy_counts()) == [0, 2, 2, 2, 2]
    assert max(ds.replay_errors()) <= 1e-9
    path = tmp_path / "d.demos"
    ds.save(path)
    back = cogail.load_dataset(path)
    assert back.to_bytes() == ds.to_bytes()
    assert back.seeds() == ds.seeds()


def test_parse_distribution():
    p = cogail.parse_distribution("17,17,33,33")
    assert sum(p) == pytest.approx(1.0)
    assert p[0] == pytest.approx(0.17)


def test_reward_values():
    assert cogail.gail_reward("cross_entropy", 0.0) == pytest.approx(math.log(2.0))
    assert cogail.gail_reward("least_squares", 0.0) == pytest.approx(0.5)
    assert cogail.decayed_lr(3e-4, 100, 200) == pytest.approx(1.5e-4)


def test_tiny_training_run(tmp_path):
    ds = cogail.generate_dataset(4, seed=1)
    ds.save(tmp_path / "d.demos")
    cfg = {
        "train": {
            "episodes": 1,
            "steps_per_episode": 600,
            "checkpoint_interval": 1,
            "warmstart_epochs": 1,
            "policy_hidden": 16,
            "policy_layers": 2,
            "recognizer_hidden": 16,
            "disc_hidden": 16,
        }
    }
    rows = cogail.train(tmp_path / "d.demos", tmp_path / "run", cfg)
    assert len(rows) == 1
    assert all(math.isfinite(v) for v in rows[0].values() if isinstance(v, float))
    ckpt = cogail.load_checkpoint(tmp_path / "run" / "ckpt_000001.bin")
    assert ckpt.episode == 1
    assert ckpt.mode == "cogail"
    interp = ckpt.eval_interpolation(3, 0)
    assert interp["n_trials"] == 3
    replay = ckpt.eval_replay(ds)
    assert replay["n_trials"] == 4
    assert 0.0 <= replay["success_rate"] <= 1.0
