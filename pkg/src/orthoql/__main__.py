from orthoql.cli import main

raise SystemExit(main())
