"""Integer-sequence workbench."""
