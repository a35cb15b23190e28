import pytest


@pytest.fixture(autouse=True)
def isolated_cache_dir(tmp_path, monkeypatch):
    """Keep every test away from the user's real cache directory."""
    monkeypatch.setenv("BERNOCCHI_CACHE_DIR", str(tmp_path / "cache"))
    return tmp_path / "cache"
