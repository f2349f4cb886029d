from .files import read_text, write_text

__all__: list[str] = ["read_text", "write_text"]
