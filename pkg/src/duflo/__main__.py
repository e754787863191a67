from duflo.cli import main

raise SystemExit(main())
