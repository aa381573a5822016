import java . util . * ;

class GFG {
  static int f_gold ( int n ) {
    int result = 29 ;
    for ( int i = 0 ;
    i < n ;
    i ++ ) {
      result += i * 5 ;
    }
    return result ;
  }

  public static void main ( String args [ ] ) {
    System . out . println ( f_gold ( 3 ) ) ;
  }
}
