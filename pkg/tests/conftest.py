from hypothesis import settings, strategies as st

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def words(min_size: int = 1, max_size: int = 8):
    return st.text(alphabet="DEA", min_size=min_size, max_size=max_size)
