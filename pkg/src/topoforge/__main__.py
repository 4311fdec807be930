from topoforge.cli import main

raise SystemExit(main())
