from functools import lru_cache

from sqlalchemy import create_engine
from sqlalchemy.orm import declarative_base, sessionmaker

Base = declarative_base()


@lru_cache(maxsize=None)
def get_session_factory(url: str) -> sessionmaker:
    """Engine and session factory for a ledger URL; tables are created on first use."""
    connect_args = {"check_same_thread": False} if url.startswith("sqlite") else {}
    engine = create_engine(url, connect_args=connect_args)
    # Import registers the model on Base.metadata
    from lrbspectra.models import report_log  # noqa: F401

    Base.metadata.create_all(bind=engine)
    return sessionmaker(bind=engine)
